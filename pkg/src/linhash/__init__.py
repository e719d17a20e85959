"""Error-detecting and error-correcting codes built from linear hash functions over GF(2)."""

__version__ = "0.1.0"
