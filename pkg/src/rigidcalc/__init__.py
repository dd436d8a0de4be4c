"""Exact operator and Hodge calculus for rigid local systems and their Fourier transforms."""

__version__ = "0.1.0"
