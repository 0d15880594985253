"""
ufgdepth - union-free generic depth for non-standard data.

Computes a center-outward ordering over finite formal contexts, mixed
spatial-categorical-numerical data and hierarchical-nominal codes.
"""

__version__ = "0.1.0"
