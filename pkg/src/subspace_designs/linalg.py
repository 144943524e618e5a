"""Exact matrices and subspaces over a finite field.

Entries are canonical field integers (see :mod:`subspace_designs.field`).  A
:class:`Subspace` always stores the reduced row echelon basis of its row
space, so structural equality is subspace equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import AmbientMismatch, FieldMismatch, ShapeMismatch
from .field import FieldSpec, parse_field_spec

__all__ = [
    "Matrix",
    "Subspace",
    "rref",
    "rank",
    "det",
    "kernel",
    "subspace_from_rows",
    "intersect",
    "join",
    "orthogonal_complement",
    "intersection_rank",
    "format_subspace",
    "parse_subspace",
]

Rows = list[list[int]]


def _rref_rows(F: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> tuple[Rows, list[int]]:
    work = [list(r) for r in rows]
    pivots: list[int] = []
    rk = 0
    n = len(work)
    for c in range(ncols):
        if rk == n:
            break
        piv = None
        for i in range(rk, n):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        lead = work[rk][c]
        if lead != 1:
            inv = F.inv(lead)
            work[rk] = [F.mul(inv, x) for x in work[rk]]
        prow = work[rk]
        for i in range(n):
            f = work[i][c]
            if i != rk and f:
                work[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(work[i], prow)]
        pivots.append(c)
        rk += 1
    return work[:rk], pivots


def _rank_rows(F: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> int:
    # forward elimination only
    work = [list(r) for r in rows]
    rk = 0
    n = len(work)
    for c in range(ncols):
        if rk == n:
            break
        piv = None
        for i in range(rk, n):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            continue
        work[rk], work[piv] = work[piv], work[rk]
        prow = work[rk]
        inv = F.inv(prow[c])
        for i in range(rk + 1, n):
            f = work[i][c]
            if f:
                f = F.mul(f, inv)
                work[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(work[i], prow)]
        rk += 1
    return rk


def _det_rows(F: FieldSpec, rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        (a, b), (c, d) = rows
        return F.sub(F.mul(a, d), F.mul(b, c))
    work = [list(r) for r in rows]
    acc = 1
    for c in range(n):
        piv = None
        for i in range(c, n):
            if work[i][c]:
                piv = i
                break
        if piv is None:
            return 0
        if piv != c:
            work[c], work[piv] = work[piv], work[c]
            acc = F.neg(acc)
        prow = work[c]
        acc = F.mul(acc, prow[c])
        inv = F.inv(prow[c])
        for i in range(c + 1, n):
            f = work[i][c]
            if f:
                f = F.mul(f, inv)
                work[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(work[i], prow)]
    return acc


def _kernel_rows(F: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> Rows:
    """Basis of {x : M x = 0}, one vector per free column."""
    red, pivots = _rref_rows(F, rows, ncols)
    pivset = set(pivots)
    out = []
    for f in range(ncols):
        if f in pivset:
            continue
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = F.neg(row[f])
        out.append(v)
    return out


@dataclass(frozen=True)
class Matrix:
    field: FieldSpec
    entries: tuple[tuple[int, ...], ...]
    cols: int

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "Matrix":
        entries = tuple(tuple(int(x) for x in r) for r in rows)
        if cols is None:
            if not entries:
                raise ShapeMismatch("column count required for an empty matrix")
            cols = len(entries[0])
        if any(len(r) != cols for r in entries):
            raise ShapeMismatch("ragged rows")
        if any(not 0 <= x < field.q for r in entries for x in r):
            raise FieldMismatch("entry outside the field's canonical range")
        return cls(field, entries, cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]


def rref(mat: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row echelon form, rank and pivot columns.

    Zero rows are dropped from the returned matrix.
    """
    red, pivots = _rref_rows(mat.field, mat.entries, mat.cols)
    return Matrix(mat.field, tuple(map(tuple, red)), mat.cols), len(pivots), pivots


def rank(mat: Matrix) -> int:
    return _rank_rows(mat.field, mat.entries, mat.cols)


def det(mat: Matrix) -> int:
    if mat.rows != mat.cols:
        raise ShapeMismatch("determinant of a non-square matrix")
    return _det_rows(mat.field, mat.entries)


def kernel(mat: Matrix) -> "Subspace":
    """Right kernel ``{x : mat @ x = 0}`` as a subspace of F^cols."""
    return subspace_from_rows(mat.field, _kernel_rows(mat.field, mat.entries, mat.cols), mat.cols)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of F^ambient held by its canonical RREF basis."""

    field: FieldSpec
    ambient: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, x in enumerate(row) if x) for row in self.basis]

    def matrix(self) -> Matrix:
        return Matrix(self.field, self.basis, self.ambient)

    def contains(self, v: Sequence[int]) -> bool:
        return _rank_rows(self.field, list(self.basis) + [list(v)], self.ambient) == self.rank

    def coordinates(self, v: Sequence[int]) -> list[int]:
        """Coefficients of ``v`` in the RREF basis (``v`` must lie in the subspace)."""
        return [v[p] for p in self.pivots]

    def __repr__(self):
        return f"Subspace(rank={self.rank}, ambient={self.ambient}, basis={[list(r) for r in self.basis]})"


def subspace_from_rows(field: FieldSpec, rows: Iterable[Sequence[int]], ambient: Optional[int] = None) -> Subspace:
    rows = [list(map(int, r)) for r in rows]
    if ambient is None:
        if not rows:
            raise ShapeMismatch("ambient rank required for an empty row list")
        ambient = len(rows[0])
    if any(len(r) != ambient for r in rows):
        raise AmbientMismatch("row length differs from ambient rank")
    red, _ = _rref_rows(field, rows, ambient)
    return Subspace(field, ambient, tuple(map(tuple, red)))


def _check_pair(U: Subspace, V: Subspace):
    if U.field != V.field:
        raise FieldMismatch("subspaces over different fields")
    if U.ambient != V.ambient:
        raise AmbientMismatch(f"ambient ranks {U.ambient} and {V.ambient} differ")


def join(U: Subspace, V: Subspace) -> Subspace:
    _check_pair(U, V)
    return subspace_from_rows(U.field, list(U.basis) + list(V.basis), U.ambient)


def orthogonal_complement(U: Subspace) -> Subspace:
    """Annihilator under the standard scalar product."""
    return subspace_from_rows(U.field, _kernel_rows(U.field, U.basis, U.ambient), U.ambient)


def intersect(U: Subspace, V: Subspace) -> Subspace:
    # U ∩ V = (U^⊥ + V^⊥)^⊥; the standard form is nondegenerate
    _check_pair(U, V)
    F, m = U.field, U.ambient
    perp = _kernel_rows(F, U.basis, m) + _kernel_rows(F, V.basis, m)
    return subspace_from_rows(F, _kernel_rows(F, perp, m), m)


def intersection_rank(U: Subspace, V: Subspace) -> int:
    """``rank(U ∩ V)`` from the modular law, without building the meet."""
    _check_pair(U, V)
    return U.rank + V.rank - _rank_rows(U.field, list(U.basis) + list(V.basis), U.ambient)


def format_subspace(U: Subspace) -> str:
    lines = [f"m={U.ambient} q={U.field.spec_string()}"]
    lines += [" ".join(map(str, row)) for row in U.basis]
    return "\n".join(lines) + "\n"


def parse_subspace(text: str) -> Subspace:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    header = dict(tok.split("=", 1) for tok in lines[0].split(None, 1))
    F = parse_field_spec(header["q"])
    m = int(header["m"])
    rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
    return subspace_from_rows(F, rows, m)
