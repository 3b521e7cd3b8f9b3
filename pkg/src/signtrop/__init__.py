"""Root multiplicities over the signed tropical hyperfield.

Hyperfields and their morphisms, polynomials over them with the two
multiplicity computations (closed formula and factorization search), Newton
polygons, and an exact Hahn-series layer used to check real-root bounds and
to lift signed tropical polynomials.
"""

from .classical import (
    EdgeReport, FactoredHahnPoly, converse_descartes, edge_transform, lift, residue, verify_theorem_B,
)
from .hahn import HahnPoly, HahnReal, poly_valuation, v_C, v_R
from .hyperfield import INF, TR, DomainError, K, ParseError, S, T, TRElem, tr_less
from .hyperpoly import HPoly, factor_step, is_factorization, mult, mult_recursive
from .newton import delta_at, initial_form_T, initial_form_TR, newton_polygon, sign_changes
from .ratpoly import RatPoly, count_positive_roots

__version__ = "0.1.0"

__all__ = [
    "EdgeReport", "FactoredHahnPoly", "converse_descartes", "edge_transform", "lift", "residue",
    "verify_theorem_B", "HahnPoly", "HahnReal", "poly_valuation", "v_C", "v_R", "INF", "TR",
    "DomainError", "K", "ParseError", "S", "T", "TRElem", "tr_less", "HPoly", "factor_step",
    "is_factorization", "mult", "mult_recursive", "delta_at", "initial_form_T", "initial_form_TR",
    "newton_polygon", "sign_changes", "RatPoly", "count_positive_roots",
]
