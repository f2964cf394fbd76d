"""Exact computations around Spin(9)-structures on 16-dimensional manifolds."""

__version__ = "0.1.0"
