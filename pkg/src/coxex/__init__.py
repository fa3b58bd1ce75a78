"""Coxeter matroids, tropical strong exchange equations and their quadrics."""

__version__ = "0.1.0"
