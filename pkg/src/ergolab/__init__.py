"""Numerical laboratory for scalar waves on ergoregion spacetimes."""

__version__ = "0.1.0"
