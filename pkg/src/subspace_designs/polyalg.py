"""Univariate polynomials over GF(q) and square polynomial matrices.

This covers the covector-to-polynomial map used to study the orthogonal
complements of the moment-curve designs: a covector ``z`` becomes
``P_z(X) = sum z_j X^j`` and the coefficient scheme ``h`` induces operators
``P_z^[n](X) = sum_j z_j h(j, n) X^(j-n)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import FieldMismatch, NonPolynomialScheme, ShapeMismatch, ZeroPolynomial
from .field import FieldSpec

__all__ = [
    "Poly",
    "PolyMatrix",
    "ZERO_DEGREE",
    "covector_poly",
    "build_M",
    "reduce_for_M",
    "polymat_det",
    "root_multiplicity",
]

# degree of the zero polynomial
ZERO_DEGREE = float("-inf")


@dataclass(frozen=True)
class Poly:
    field: FieldSpec
    coeffs: tuple[int, ...]

    @classmethod
    def make(cls, field: FieldSpec, coeffs: Sequence[int]) -> "Poly":
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        return cls(field, tuple(c))

    @classmethod
    def constant(cls, field: FieldSpec, c: int) -> "Poly":
        return cls.make(field, [c])

    @classmethod
    def x_minus(cls, field: FieldSpec, t: int) -> "Poly":
        return cls.make(field, [field.neg(t), 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else ZERO_DEGREE

    def is_zero(self) -> bool:
        return not self.coeffs

    def _check(self, other: "Poly"):
        if self.field != other.field:
            raise FieldMismatch("polynomials over different fields")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return Poly.make(F, [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, tuple(self.field.neg(c) for c in self.coeffs))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(F, ())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] = F.add(out[i + j], F.mul(x, y))
        return Poly.make(F, out)

    def scale(self, c: int) -> "Poly":
        return Poly.make(self.field, [self.field.mul(c, x) for x in self.coeffs])

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        F = self.field
        rem = list(self.coeffs)
        db = len(other.coeffs) - 1
        inv = F.inv(other.coeffs[-1])
        quot = [0] * max(0, len(rem) - db)
        for k in range(len(rem) - 1 - db, -1, -1):
            c = F.mul(rem[k + db], inv)
            quot[k] = c
            if c:
                for i, y in enumerate(other.coeffs):
                    rem[k + i] = F.sub(rem[k + i], F.mul(c, y))
        return Poly.make(F, quot), Poly.make(F, rem[:db] if db > 0 else [])

    def __call__(self, t: int) -> int:
        """Horner evaluation at a canonical field integer."""
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, t), c)
        return acc

    def to_list(self) -> list[int]:
        return list(self.coeffs)


@dataclass(frozen=True)
class PolyMatrix:
    field: FieldSpec
    entries: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if any(len(row) != n for row in self.entries):
            raise ShapeMismatch("polynomial matrix must be square")

    @property
    def size(self) -> int:
        return len(self.entries)

    def evaluate(self, t: int) -> list[list[int]]:
        return [[p(t) for p in row] for row in self.entries]

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "PolyMatrix":
        one, zero = Poly.constant(field, 1), Poly(field, ())
        return cls(field, tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n)))


def _scheme_is_polynomial(scheme, n: int) -> bool:
    return all(scheme.h(i, n) == 0 for i in range(min(n, scheme.d + 1)))


def covector_poly(z: Sequence[int], scheme, n: int) -> Poly:
    """``P_z^[n](X)``; requires ``h(i, n) == 0`` for every ``i < n``."""
    F = scheme.field
    if len(z) != scheme.d + 1:
        raise ShapeMismatch(f"covector length {len(z)} != d+1 = {scheme.d + 1}")
    if not _scheme_is_polynomial(scheme, n):
        raise NonPolynomialScheme(f"h(i, {n}) != 0 for some i < {n}")
    return Poly.make(F, [F.mul(z[j], scheme.h(j, n)) for j in range(n, scheme.d + 1)])


def reduce_for_M(field: FieldSpec, basis: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-reduce from the right so the j-th vector (1-based) ends in j-1 zeros."""
    rows = [list(r) for r in basis]
    m = len(rows[0]) if rows else 0
    out = []
    col = m - 1
    while rows and col >= 0:
        piv = next((i for i, r in enumerate(rows) if r[col]), None)
        if piv is not None:
            prow = rows.pop(piv)
            inv = field.inv(prow[col])
            prow = [field.mul(inv, x) for x in prow]
            rows = [[field.sub(x, field.mul(r[col], y)) for x, y in zip(r, prow)] for r in rows]
            out.append(prow)
        col -= 1
    if len(out) != len(basis):
        raise ValueError("basis vectors are linearly dependent")
    return out


def build_M(basis: Sequence[Sequence[int]], scheme, d: int | None = None) -> PolyMatrix:
    """Square matrix with entry (n, j) = ``P_{b(j)}^[n](X)``, n = 0..r-1.

    ``basis`` must satisfy ``deg P_{b(j)} <= d - j + 1`` (1-based j); use
    :func:`reduce_for_M` to bring an arbitrary basis into that shape.
    """
    F = scheme.field
    d = scheme.d if d is None else d
    r = len(basis)
    for j, b in enumerate(basis):
        if any(b[c] for c in range(d - j + 1, d + 1)):
            raise ValueError(f"basis vector {j + 1} has degree above {d - j}")
    rows = tuple(tuple(covector_poly(b, scheme, n) for b in basis) for n in range(r))
    return PolyMatrix(F, rows)


def _leibniz(M: PolyMatrix) -> Poly:
    F = M.field
    n = M.size
    total = Poly(F, ())
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
        term = Poly.constant(F, 1)
        for row, col in enumerate(perm):
            term = term * M.entries[row][col]
            if term.is_zero():
                break
        total = total - term if inversions % 2 else total + term
    return total


def _bareiss(M: PolyMatrix) -> Poly:
    F = M.field
    n = M.size
    a = [list(row) for row in M.entries]
    sign = 1
    prev = Poly.constant(F, 1)
    for k in range(n - 1):
        if a[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not a[i][k].is_zero()), None)
            if swap is None:
                return Poly(F, ())
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * a[k][k] - a[i][k] * a[k][j]
                quo, rem = divmod(num, prev)
                assert rem.is_zero()
                a[i][j] = quo
        prev = a[k][k]
    det = a[n - 1][n - 1]
    return -det if sign < 0 else det


def polymat_det(M: PolyMatrix) -> Poly:
    """Determinant; Leibniz below size 4, fraction-free elimination above."""
    if M.size == 0:
        return Poly.constant(M.field, 1)
    if M.size < 4:
        return _leibniz(M)
    return _bareiss(M)


def root_multiplicity(p: Poly, t: int) -> int:
    """Largest e with (X - t)^e dividing ``p``."""
    if p.is_zero():
        raise ZeroPolynomial("every element is a root of the zero polynomial")
    F = p.field
    coeffs = list(p.coeffs)
    e = 0
    while len(coeffs) > 1:
        # synthetic division by (X - t)
        out = [0] * (len(coeffs) - 1)
        acc = 0
        for k in range(len(coeffs) - 1, 0, -1):
            acc = F.add(F.mul(acc, t), coeffs[k])
            out[k - 1] = acc
        rem = F.add(F.mul(acc, t), coeffs[0])
        if rem:
            break
        coeffs = out
        e += 1
    return e
