"""Generalized Diophantine m-tuples with property D_k(n)."""
from ._kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
