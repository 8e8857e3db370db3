"""infodist: compression-based estimates of information distances between symbol sequences."""

__version__ = "0.1.0"
