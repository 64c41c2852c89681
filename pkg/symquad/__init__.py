"""Exact quadratization of symmetric pseudo-Boolean functions."""

__version__ = "0.1.0"
