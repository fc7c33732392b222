"""Exact closed forms of algebraic Gauss hypergeometric functions via Darboux coverings."""

__version__ = "0.1.0"
