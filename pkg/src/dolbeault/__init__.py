"""Exact combinatorics behind hook-Schur Dolbeault vanishing bounds.

Partitions and the delta function, Littlewood-Richardson products, Bott's
algorithm on Grassmannians, the vanishing predicates, Borel-Le Potier index
bookkeeping and a split-bundle cross-validation harness.
"""
from ._kernels import BACKEND
from .errors import ConfigError, DomainError

__version__ = "0.1.0"
__all__ = ["BACKEND", "ConfigError", "DomainError", "__version__"]
