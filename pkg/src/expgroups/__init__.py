"""Exponents of finite classical, alternating and sporadic groups."""

__version__ = "0.1.0"
