# infodist utils package
