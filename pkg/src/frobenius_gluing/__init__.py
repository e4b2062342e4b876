"""Frobenius complexes and Betti numbers of affine monoids, and gluing checks."""

from .errors import DescriptorError, ResourceLimitError
from .frobenius import (FORMAL_S2, PoincareTable, betti_vector, composition_check,
                        dirsum_predicted_table, face_counts, frobenius_complex, poincare_table)
from .gluing import (enumerate_decompositions, predicted_betti, predicted_poincare_table,
                     verify_gluing)
from .homology import BettiVector, SimplicialComplex, convolve, reduced_betti, shift
from .linalg import GF2, QQ, FieldChoice
from .monoid import (Free, Glued, GluedElement, Submonoid, adjoin_root, direct_sum,
                     numerical_semigroup)
from .poset import FinitePoset, composition_poset, order_complex
from .serialization import load_monoid, parse_element, parse_monoid

__all__ = [
    "BettiVector", "DescriptorError", "FORMAL_S2", "FieldChoice", "FinitePoset", "Free", "GF2",
    "Glued", "GluedElement", "PoincareTable", "QQ", "ResourceLimitError", "SimplicialComplex",
    "Submonoid", "adjoin_root", "betti_vector", "composition_check", "composition_poset",
    "convolve", "direct_sum", "dirsum_predicted_table", "enumerate_decompositions",
    "face_counts", "frobenius_complex", "load_monoid", "numerical_semigroup", "order_complex",
    "parse_element", "parse_monoid", "poincare_table", "predicted_betti",
    "predicted_poincare_table", "reduced_betti", "shift", "verify_gluing",
]
