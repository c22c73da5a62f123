"""Exact computations with Lie pairs over commutative semirings."""

__version__ = "0.1.0"
