"""Moment-curve families of rank-r subspaces of F^(r+s).

A family is given by a coefficient table ``h(i, n)`` (``i = 0..d``,
``n = 0..r-1``, ``d = r+s-1``).  Its member at ``t`` is spanned by the rows
``h(i, n) * t^(i-n)``, so every Pluecker coordinate has the closed form
``h(i_1..i_r) * t^(i_1+...+i_r - C(r,2))`` where ``h(i_1..i_r)`` is the r x r
minor of the table on the chosen columns.

Three tables are provided:

* ``tangent``:  ``h(i, n) = i!/(i-n)!`` for ``i >= n``, else 0.
* ``diverted``: ``h(i, n) = omega^(n(i-r))`` for ``i >= r`` or ``i == n < r``, else 0.
* ``secant``:   ``h(i, n) = omega^(n*i)``.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from typing import Optional, Sequence

from .errors import InvalidScheme, LengthMismatch, MonotonicityViolation
from .exterior import PlueckerVector, index_tuples, pluecker, _normalize
from .field import FieldSpec, FieldElement, _order, parse_field_spec
from .linalg import Subspace, _det_rows, subspace_from_rows

__all__ = [
    "FAMILIES",
    "CoefficientScheme",
    "Design",
    "moment_point",
    "scheme_coeff",
    "build_design",
    "check_coeffs_nonzero",
    "find_omega",
    "generalized_vandermonde",
    "sigma_bounds",
    "SigmaBounds",
    "existence_conditions",
    "design_to_json",
    "design_from_json",
]

FAMILIES = ("tangent", "diverted", "secant")


@dataclass(frozen=True)
class CoefficientScheme:
    family: str
    r: int
    s: int
    field: FieldSpec
    omega: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InvalidScheme(f"unknown family {self.family!r}")
        if self.r < 1 or self.s < 1:
            raise InvalidScheme("r and s must be positive")
        if self.family != "tangent":
            if self.omega is None or not self.omega:
                raise InvalidScheme(f"{self.family} needs a nonzero omega")
            if not 0 < self.omega < self.field.q:
                raise InvalidScheme("omega outside the field")

    @property
    def d(self) -> int:
        return self.r + self.s - 1

    @property
    def m(self) -> int:
        return self.r + self.s

    @property
    def k(self) -> int:
        return self.r - 1

    def h(self, i: int, n: int) -> int:
        F = self.field
        if self.family == "tangent":
            if i < n:
                return 0
            return F.from_int(math.factorial(i) // math.factorial(i - n))
        if self.family == "diverted":
            if i >= self.r or i == n:
                return F.pow(self.omega, n * (i - self.r))
            return 0
        return F.pow(self.omega, n * i)

    def table(self) -> list[list[int]]:
        """The r x (d+1) table of ``h(i, n)`` with rows indexed by n."""
        return [[self.h(i, n) for i in range(self.d + 1)] for n in range(self.r)]

    def is_polynomial(self) -> bool:
        return all(self.h(i, n) == 0 for n in range(self.r) for i in range(n))

    def validate(self):
        """Raise :class:`InvalidScheme` unless the family's preconditions hold."""
        F = self.field
        if self.family == "tangent" and F.p <= self.r + self.s:
            raise InvalidScheme(f"tangent family needs characteristic > {self.r + self.s}, got {F.p}")
        if self.family == "secant" and _order(F, self.omega) < self.r + self.s:
            raise InvalidScheme(f"secant family needs omega of order >= {self.r + self.s}")
        ok, bad = check_coeffs_nonzero(self)
        if not ok:
            raise InvalidScheme(f"coefficient determinant vanishes at {bad}")

    def to_json(self) -> dict:
        return {"family": self.family, "r": self.r, "s": self.s, "omega": self.omega}


def moment_point(t: FieldElement, d: int) -> list[FieldElement]:
    """``(1, t, t^2, ..., t^d)``."""
    return [t**i for i in range(d + 1)]


def scheme_coeff(scheme: CoefficientScheme, idx: Sequence[int]) -> FieldElement:
    """The r x r minor ``h(i_1..i_r)`` of the coefficient table."""
    rows = [[scheme.h(i, n) for i in idx] for n in range(scheme.r)]
    return FieldElement(scheme.field, _det_rows(scheme.field, rows))


def check_coeffs_nonzero(scheme: CoefficientScheme) -> tuple[bool, Optional[tuple[int, ...]]]:
    """``(True, None)`` if every minor is nonzero, else the first offending tuple."""
    for t in index_tuples(scheme.m, scheme.r):
        if not scheme_coeff(scheme, t):
            return False, t
    return True, None


def find_omega(field: FieldSpec, r: int, s: int, family: str) -> Optional[FieldElement]:
    """First nonzero omega in canonical order whose scheme has no vanishing minor."""
    if family not in ("diverted", "secant"):
        raise InvalidScheme("find_omega applies to the diverted and secant families")
    for w in range(1, field.q):
        if check_coeffs_nonzero(CoefficientScheme(family, r, s, field, w))[0]:
            return FieldElement(field, w)
    return None


@dataclass(frozen=True)
class Design:
    scheme: CoefficientScheme
    members: dict = dc_field(hash=False, compare=True)

    @property
    def field(self) -> FieldSpec:
        return self.scheme.field

    @property
    def subspaces(self) -> list[Subspace]:
        return [self.members[t][0] for t in sorted(self.members)]

    @property
    def vectors(self) -> list[PlueckerVector]:
        return [self.members[t][1] for t in sorted(self.members)]

    def __len__(self):
        return len(self.members)


def _closed_form(scheme: CoefficientScheme, coeffs: Sequence[int], t: int) -> PlueckerVector:
    F = scheme.field
    c2 = scheme.r * (scheme.r - 1) // 2
    raw = [F.mul(c, F.pow(t, sum(idx) - c2)) for c, idx in zip(coeffs, index_tuples(scheme.m, scheme.r))]
    return PlueckerVector(F, scheme.m, scheme.r, _normalize(F, raw))


def build_design(scheme: CoefficientScheme) -> Design:
    """All members ``H(t)``, ``t`` in F, with subspace and Pluecker vector.

    Each vector comes from the closed form and is checked against the
    Pluecker vector of an explicit basis: the rows ``h(i, n) t^i`` for
    ``t != 0``, and ``e_0..e_{r-1}`` for ``t == 0``.
    """
    scheme.validate()
    F = scheme.field
    coeffs = [int(scheme_coeff(scheme, idx)) for idx in index_tuples(scheme.m, scheme.r)]
    members = {}
    for t in range(F.q):
        vec = _closed_form(scheme, coeffs, t)
        if t:
            rows = [[F.mul(scheme.h(i, n), F.pow(t, i)) for i in range(scheme.d + 1)] for n in range(scheme.r)]
        else:
            rows = [[int(i == n) for i in range(scheme.m)] for n in range(scheme.r)]
        sub = subspace_from_rows(F, rows, scheme.m)
        if sub.rank != scheme.r or pluecker(sub) != vec:
            raise AssertionError(f"member at t={t} disagrees with the closed form")
        members[t] = (sub, vec)
    return Design(scheme, members)


def generalized_vandermonde(exponents: Sequence[int], elements: Sequence) -> FieldElement:
    """``det(a_k ** j_l)`` for strictly increasing nonnegative exponents."""
    if len(exponents) != len(elements):
        raise LengthMismatch("exponent and element lists differ in length")
    if any(j < 0 for j in exponents) or any(a >= b for a, b in zip(exponents, exponents[1:])):
        raise MonotonicityViolation("exponents must be strictly increasing and nonnegative")
    if not elements:
        raise LengthMismatch("empty determinant")
    F = elements[0].field
    rows = [[F.pow(int(a), j) for j in exponents] for a in elements]
    return FieldElement(F, _det_rows(F, rows))


@dataclass(frozen=True)
class SigmaBounds:
    sigma_ident: int
    sigma_opp: int
    max_minus_min_bound: Fraction
    leading_degree_bound: Fraction
    nonzero_root_bound: int


def sigma_bounds(j: Sequence[int], b: Sequence[int], d: int, r: int) -> SigmaBounds:
    """Extreme values of ``sum_k b_k j_sigma(k)`` over permutations, with bounds.

    The sum is largest for the identity and smallest for the reversal.
    """
    N = len(j)
    if len(b) != N:
        raise LengthMismatch("j and b differ in length")
    if any(x >= y for x, y in zip(j, j[1:])) or any(x >= y for x, y in zip(b, b[1:])):
        raise MonotonicityViolation("j and b must be strictly increasing")
    if N and (j[0] < 0 or j[-1] > r - 1 or b[0] < 0 or b[-1] > d - r):
        raise MonotonicityViolation("need 0 <= j <= r-1 and 0 <= b <= d-r")
    ident = sum(x * y for x, y in zip(b, j))
    opp = sum(x * y for x, y in zip(b, reversed(j)))
    return SigmaBounds(
        sigma_ident=ident,
        sigma_opp=opp,
        max_minus_min_bound=Fraction(N * (d - r) * (r - 1), 2),
        leading_degree_bound=N * (d - r) * (r - 1) - Fraction(N * (N - 1), 2) * Fraction(d, 3),
        nonzero_root_bound=math.comb(r, 2) * (d - r),
    )


def existence_conditions(r: int, s: int, field: FieldSpec) -> dict:
    """Which sufficient conditions for a strong (s, r*s) design hold over ``field``."""
    p, q = field.p, field.q
    c2 = math.comb(r, 2)
    big = math.comb(r + s, r) * c2 * (s - 1)
    return {
        "r": r,
        "s": s,
        "field": field.spec_string(),
        "char_zero": False,
        "char_gt_m": p > r + s,
        "q_gt_count_bound": q > big,
        "q_gt_p_power_bound": q > p ** (c2 * (s - 1)),
        "count_bound": big,
        "p_power_bound": p ** (c2 * (s - 1)),
        "weak_design_q_gt_m": q > r + s,
    }


def design_to_json(design: Design) -> dict:
    members = {
        str(t): {"basis": [list(row) for row in sub.basis], "pluecker": vec.to_json()["coords"]}
        for t, (sub, vec) in sorted(design.members.items())
    }
    out = {"field": design.field.spec_string(), "m": design.scheme.m}
    out.update(design.scheme.to_json())
    out["members"] = members
    return out


def members_to_json(field: FieldSpec, members: Sequence[Subspace], **extra) -> dict:
    """Serialize a bare member list in the same layout as a design."""
    out = {"field": field.spec_string(), "m": members[0].ambient if members else 0}
    out.update(extra)
    out["members"] = {
        str(i): {"basis": [list(row) for row in sub.basis],
                 "pluecker": pluecker(sub).to_json()["coords"] if sub.rank else {}}
        for i, sub in enumerate(members)
    }
    return out


def design_from_json(data) -> tuple[FieldSpec, list[Subspace]]:
    """Field and member subspaces (in key order) from design JSON."""
    if isinstance(data, str):
        data = json.loads(data)
    F = parse_field_spec(data["field"])
    m = int(data["m"])
    members = [
        subspace_from_rows(F, data["members"][k]["basis"], m)
        for k in sorted(data["members"], key=int)
    ]
    return F, members
