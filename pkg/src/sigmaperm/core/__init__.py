"""Permutation-group toolbox, σ-property checkers, least-partition solvers
and oracles."""

from .stab_chain import PermGroup, StabilizerChain
from .toolbox import ChiefSeries, Section, chief_series, core, normal_closure, o_upper_pi, sylow
from .checks import (
    is_sigma_nilpotent,
    is_sigma_p_permutable,
    is_sigma_permutable_soluble,
    is_sigma_soluble,
    is_sigma_subnormal,
    is_subnormal,
)
from .least import (
    least_sigma_nilpotent,
    least_sigma_p_permutable,
    least_sigma_soluble,
    least_sigma_subnormal_experimental,
    verify_least,
)
from .verify_engine import VerifyEngine, VerifyResult

__all__ = [
    "PermGroup",
    "StabilizerChain",
    "ChiefSeries",
    "Section",
    "chief_series",
    "core",
    "normal_closure",
    "o_upper_pi",
    "sylow",
    "is_sigma_nilpotent",
    "is_sigma_p_permutable",
    "is_sigma_permutable_soluble",
    "is_sigma_soluble",
    "is_sigma_subnormal",
    "is_subnormal",
    "least_sigma_nilpotent",
    "least_sigma_p_permutable",
    "least_sigma_soluble",
    "least_sigma_subnormal_experimental",
    "verify_least",
    "VerifyEngine",
    "VerifyResult",
]
