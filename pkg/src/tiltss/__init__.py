"""Exact computations with Schur and web categories, exterior powers of GL_n,
and semisimplified tilting categories in characteristic p."""

__version__ = "0.1.0"
