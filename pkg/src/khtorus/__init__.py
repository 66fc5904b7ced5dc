"""Khovanov homology of torus links, with the closed-form answers for the
(2k, 2kn) and (3, q) families and the arc ring H^k."""

__version__ = "0.1.0"

from .diagram import (BraidWord, LinkDiagram, close_braid, parse_braid, resolve,
                      reverse_orientation, torus_braid, torus_diagram, torus_prime_diagram,
                      unknot)
from .algebra import AbelianGroupIso, SparseIntMatrix, frobenius_tables, snf
from .chain import BigradedComplex, build_complex
from .reduction import reduced_complex
from .homology import (BigradedAbelianGroup, delta_width, homology, khovanov_homology,
                       lee_degree_ranks, poincare, shift_to_invariant)
from .polynomial import LaurentPoly2
from .torusform import (admissible_subsets, binom, catalan, theorem1_bounds, theorem2_profile,
                        theorem3_poincare, stable_P2, stable_P3)
from .archring import ArcRing, center, enumerate_matchings
from .report import Report

__all__ = [
    "BraidWord", "LinkDiagram", "close_braid", "parse_braid", "resolve", "reverse_orientation",
    "torus_braid", "torus_diagram", "torus_prime_diagram", "unknot",
    "AbelianGroupIso", "SparseIntMatrix", "frobenius_tables", "snf",
    "BigradedComplex", "build_complex", "reduced_complex",
    "BigradedAbelianGroup", "delta_width", "homology", "khovanov_homology", "lee_degree_ranks",
    "poincare", "shift_to_invariant", "LaurentPoly2",
    "admissible_subsets", "binom", "catalan", "theorem1_bounds", "theorem2_profile",
    "theorem3_poincare", "stable_P2", "stable_P3",
    "ArcRing", "center", "enumerate_matchings", "Report",
]
