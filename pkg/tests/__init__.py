#Coming soon !