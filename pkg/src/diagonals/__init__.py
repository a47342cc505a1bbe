"""Exact computational toolkit for diagonal ideals of Weyl groups."""

__version__ = "0.1.0"
