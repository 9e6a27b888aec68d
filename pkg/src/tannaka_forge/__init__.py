"""Exact-arithmetic Tannaka reconstruction for Lie algebras at desk scale."""

__version__ = "0.1.0"
