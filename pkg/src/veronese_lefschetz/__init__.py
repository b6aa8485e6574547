"""Veronese subalgebras of stable Cohen-Macaulay quotients: h-vectors, Lefschetz properties, complexes."""

from .exactla import RationalMatrix, rank, row_reduce_pivots
from .monomials import MonomialIdeal, parse_ideal
from .upoly import IntPolynomial
from .veronese import VeroneseQuotient, veronese_degree, veronese_h_transform

__version__ = "0.1.0"

__all__ = [
    "IntPolynomial",
    "MonomialIdeal",
    "RationalMatrix",
    "VeroneseQuotient",
    "parse_ideal",
    "rank",
    "row_reduce_pivots",
    "veronese_degree",
    "veronese_h_transform",
]
