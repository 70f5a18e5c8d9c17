"""Braids, Garside normal forms and their action on curves in the punctured disk."""
from ._accel import USE_NUMBA
from .braid import (
    BraidSyntaxError,
    BraidWord,
    Permutation,
    StrandMismatchError,
    artin,
    band,
    parse_braid,
    permutation_of,
)
from .curves_classical import CurveWord, parse_curve, round_curve
from .curves_dual import DualCurveWord, parse_dual_curve, standard_curve
from .garside import (
    BudgetExceeded,
    GarsideNormalForm,
    Structure,
    equals,
    is_periodic,
    normal_form,
    sliding_orbit,
)
from .reducibility import NTKind, NTVerdict, PunctureSet, find_standard_invariant_curve, nt_type

__version__ = "0.1.0"

__all__ = [
    "USE_NUMBA",
    "BraidSyntaxError",
    "BraidWord",
    "BudgetExceeded",
    "CurveWord",
    "DualCurveWord",
    "GarsideNormalForm",
    "NTKind",
    "NTVerdict",
    "Permutation",
    "PunctureSet",
    "StrandMismatchError",
    "Structure",
    "artin",
    "band",
    "equals",
    "find_standard_invariant_curve",
    "is_periodic",
    "normal_form",
    "nt_type",
    "parse_braid",
    "parse_curve",
    "parse_dual_curve",
    "permutation_of",
    "round_curve",
    "sliding_orbit",
    "standard_curve",
]
