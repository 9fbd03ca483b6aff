"""Braid monodromy toolkit: braid words, Kummer lifts, generification and
Zariski-van Kampen presentations."""

from .braid import (
    BraidWord,
    MarkedBraidWord,
    braids_equal,
    conj,
    forget_strand,
    full_twist,
    half_twist,
    partial_garside,
    permutation_of,
    pseudo_coxeter,
    star,
    to_marked_generators,
)
from .errors import (
    BraidMonoError,
    OracleMismatchError,
    ProductMismatchError,
    ResourceLimitError,
    StrandMismatchError,
    ValidationError,
)
from .factorization import (
    Factorization,
    apply_moves,
    conjugate_all,
    hurwitz,
    is_generic,
    replace_entry,
)
from .kummer import LiftSpec, kummer_infinity_braid, lift_braid, lift_factorization

__version__ = "0.1.0"

__all__ = [
    "BraidMonoError",
    "BraidWord",
    "Factorization",
    "LiftSpec",
    "MarkedBraidWord",
    "OracleMismatchError",
    "ProductMismatchError",
    "ResourceLimitError",
    "StrandMismatchError",
    "ValidationError",
    "apply_moves",
    "braids_equal",
    "conj",
    "conjugate_all",
    "forget_strand",
    "full_twist",
    "half_twist",
    "hurwitz",
    "is_generic",
    "kummer_infinity_braid",
    "lift_braid",
    "lift_factorization",
    "partial_garside",
    "permutation_of",
    "pseudo_coxeter",
    "replace_entry",
    "star",
    "to_marked_generators",
]
