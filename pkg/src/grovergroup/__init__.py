"""Exact and numerical tools for the Grover walk on complete graphs with self-loops."""

from .cyclotomic import CycNum, cyclotomic_polynomial, zeta_pow
from .linalg import CycMatrix
from .monomial import SignedShift

__version__ = "0.1.0"

__all__ = ["CycMatrix", "CycNum", "SignedShift", "cyclotomic_polynomial", "zeta_pow"]
