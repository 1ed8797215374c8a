"""Exact fixed-point computations for circle actions with isolated fixed points.

Data is exchanged as interchange JSON documents (strings). Rational results
come back as ``fractions.Fraction``, polynomials as ``{exponent: coefficient}``
and reports as plain dictionaries.
"""

import json

from ._core import (
    DEFAULT_MAX_LEAVES,
    InconsistentDataError,
    PreconditionError,
    SearchSpaceTooLarge,
    ValidationError,
    c1_power,
    canonicalize,
    chern_monomial,
    chi_y_from_data,
    chi_y_hrr_projective,
    hyperplane_model,
    k_coefficients,
    line_bundle_power,
    linear_pn,
    residue_constraints_hold,
    residue_sum,
)
from . import _core

__all__ = [
    "DEFAULT_MAX_LEAVES",
    "InconsistentDataError",
    "PreconditionError",
    "SearchSpaceTooLarge",
    "ValidationError",
    "c1_power",
    "canonicalize",
    "chern_monomial",
    "chi_y_from_data",
    "chi_y_hrr_projective",
    "distinctness_analysis",
    "first_chern_candidates",
    "hattori_verdict",
    "hyperplane_model",
    "k_coefficients",
    "line_bundle_power",
    "linear_pn",
    "pair_restriction_check",
    "report",
    "residue_constraints_hold",
    "residue_sum",
    "search",
]


def report(document):
    """Full invariant report for a document."""
    return json.loads(_core._report(document))


def hattori_verdict(document):
    return json.loads(_core._hattori(document))


def distinctness_analysis(document):
    return json.loads(_core._distinctness(document))


def first_chern_candidates(n):
    return json.loads(_core._first_chern(n))


def pair_restriction_check(m_document, d_document, embedding=None):
    """Restriction report; ``embedding[k]`` is the M-index of D's k-th point."""
    return json.loads(_core._pair(m_document, d_document, embedding))


def search(n, bound, *, require_profile=False, require_condition_c=False, k0=None,
           max_leaves=DEFAULT_MAX_LEAVES, threads=0):
    """Run the rigidity experiment. Returns ``(report, survivor_documents)``."""
    text, survivors = _core._search(n, bound, require_profile, require_condition_c, k0,
                                    max_leaves, threads)
    return json.loads(text), list(survivors)
