"""Exact structure theory of finite-dimensional left Leibniz algebras over the rationals."""
from .algebra import LeibnizAlgebra
from .exactla import Flag, Matrix, Subspace, span

__version__ = "0.1.0"

__all__ = ["LeibnizAlgebra", "Matrix", "Subspace", "Flag", "span", "__version__"]
