"""Exact computations with Hecke algebras, Soergel bimodules and monodromic complexes."""

__version__ = "0.1.0"
