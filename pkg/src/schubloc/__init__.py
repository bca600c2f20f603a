"""Exact combinatorics of Schubert classes restricted to torus-fixed points."""
from .polynomial import CohomologyPolynomial, HilbertSeries, LaurentPolynomial, QPolynomial, specialize
from .root_system import CartanType, cartan_matrix, positive_roots, reflect_simple
from .weyl import WeylElement, WeylGroup, parse_word

__all__ = [
    "CartanType",
    "cartan_matrix",
    "positive_roots",
    "reflect_simple",
    "WeylGroup",
    "WeylElement",
    "parse_word",
    "LaurentPolynomial",
    "QPolynomial",
    "CohomologyPolynomial",
    "HilbertSeries",
    "specialize",
]
