"""Subspace designs and higgledy-piggledy families over finite fields."""

from .constructions import CoefficientScheme, Design, build_design, find_omega
from .designs import (
    VerifyMode,
    find_blocker_greedy,
    hp_check,
    lower_bound,
    measure,
    measure_strong,
    measure_weak,
)
from .errors import DesignError
from .exterior import PlueckerVector, dual_pluecker, meets, pairing, pluecker, relations_check
from .field import FieldElement, FieldSpec, make_field, parse_field_spec
from .grassmann import GrassmannIterator, enumerate_subspaces, gaussian_binomial
from .linalg import Subspace, intersect, join, orthogonal_complement, subspace_from_rows

__version__ = "0.1.0"

__all__ = [
    "CoefficientScheme", "Design", "build_design", "find_omega",
    "VerifyMode", "find_blocker_greedy", "hp_check", "lower_bound",
    "measure", "measure_strong", "measure_weak",
    "DesignError",
    "PlueckerVector", "dual_pluecker", "meets", "pairing", "pluecker", "relations_check",
    "FieldElement", "FieldSpec", "make_field", "parse_field_spec",
    "GrassmannIterator", "enumerate_subspaces", "gaussian_binomial",
    "Subspace", "intersect", "join", "orthogonal_complement", "subspace_from_rows",
]
