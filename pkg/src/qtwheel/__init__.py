"""Elliptic curves, (q,t)-wheel chip-firing groups and cyclic-language zeta functions."""

__version__ = "0.1.0"
