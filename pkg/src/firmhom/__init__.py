"""Exact computations with nonunital rings and their modules."""

__version__ = "0.1.0"
