"""Finitely generalized-convex functions and the solvers built on them."""

__version__ = '0.4.0'
