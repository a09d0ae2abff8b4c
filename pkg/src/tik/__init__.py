"""Vanishing ideals on degenerate tori over finite fields.

Complete intersection test, generators, degree, index of regularity and the
Frobenius number of the associated numerical semigroup, each backed by an
independent brute-force route.
"""

from .analysis import AnalysisReport, analyze
from .cyclic import TorusSpec, element_orders, primitive_root, reduce_orders
from .lattice_ideal import Binomial, GradedBinomialSet, IntegerLattice
from .semigroup import NumericalSemigroup, ci_gluing, frobenius_bruteforce, herzog3

__all__ = [
    "AnalysisReport", "Binomial", "GradedBinomialSet", "IntegerLattice",
    "NumericalSemigroup", "TorusSpec", "analyze", "ci_gluing", "element_orders",
    "frobenius_bruteforce", "herzog3", "primitive_root", "reduce_orders",
]
