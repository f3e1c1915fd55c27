"""Mutually unbiased bases over finite fields F_{q^2}.

Field arithmetic, Hermitian predicates, exhaustive searches for the maximal
number of MUBs, known constructions, an exact number-field example and the
defining polynomial systems.
"""

from .constructions import WfParams, admissible_q, tensor_mubs, wf_mubs
from .gf import FieldCtx, FieldError, build_field, frobenius, norm
from .hermitian import MubSet, VerificationReport, is_hadamard, is_mu, verify_mub_set
from .search import SearchReport, build_ratio_table, canonical_form, compute_M, compute_nu, search_full

__version__ = "0.1.0"

__all__ = [
    "FieldCtx",
    "FieldError",
    "MubSet",
    "SearchReport",
    "VerificationReport",
    "WfParams",
    "admissible_q",
    "build_field",
    "build_ratio_table",
    "canonical_form",
    "compute_M",
    "compute_nu",
    "frobenius",
    "is_hadamard",
    "is_mu",
    "norm",
    "search_full",
    "tensor_mubs",
    "verify_mub_set",
    "wf_mubs",
]
