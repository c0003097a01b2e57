"""Symmetric crystals, global bases and the type-B affine Hecke polynomial representation."""

__version__ = "0.1.0"
