"""Surplus kernels, finite transforms, conjugation and leanness."""
