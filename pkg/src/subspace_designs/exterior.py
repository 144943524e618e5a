"""Pluecker coordinates, their quadratic relations and the meet pairing.

Coordinates are indexed by strictly increasing r-tuples of column indices in
lexicographic order.  Vectors are normalized so that the first nonzero
coordinate is 1.
"""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass
from typing import Mapping, Optional, Sequence

from .errors import (
    IdenticalTuples,
    ShapeMismatch,
    UnequalIndexSums,
    ZeroRankSubspace,
)
from .field import FieldSpec, FieldElement, parse_field_spec
from .linalg import Subspace, _det_rows, intersection_rank, orthogonal_complement

__all__ = [
    "PlueckerVector",
    "Relation",
    "index_tuples",
    "pluecker",
    "dual_pluecker",
    "pairing",
    "meets",
    "relations_check",
    "relation_for_pair",
    "plucker_relations",
]

IndexTuple = tuple[int, ...]


@functools.lru_cache(maxsize=None)
def index_tuples(m: int, r: int) -> tuple[IndexTuple, ...]:
    return tuple(itertools.combinations(range(m), r))


@functools.lru_cache(maxsize=None)
def _positions(m: int, r: int) -> dict[IndexTuple, int]:
    return {t: i for i, t in enumerate(index_tuples(m, r))}


def _sort_sign(idx: Sequence[int]) -> tuple[int, Optional[IndexTuple]]:
    """Sign of the sorting permutation and the sorted tuple; (0, None) on repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, None
    sign = 1
    # insertion sort, counting transpositions
    for i in range(1, len(idx)):
        j = i
        while j > 0 and idx[j - 1] > idx[j]:
            idx[j - 1], idx[j] = idx[j], idx[j - 1]
            sign = -sign
            j -= 1
    return sign, tuple(idx)


def _normalize(F: FieldSpec, coords: Sequence[int]) -> tuple[int, ...]:
    for c in coords:
        if c:
            if c == 1:
                return tuple(coords)
            inv = F.inv(c)
            return tuple(F.mul(inv, x) for x in coords)
    raise ValueError("the zero vector has no projective normalization")


@dataclass(frozen=True)
class PlueckerVector:
    field: FieldSpec
    m: int
    r: int
    coords: tuple[int, ...]

    @classmethod
    def from_coords(cls, field: FieldSpec, m: int, r: int, values) -> "PlueckerVector":
        """Build from a full coordinate sequence or a ``{tuple: value}`` mapping."""
        tuples = index_tuples(m, r)
        if isinstance(values, Mapping):
            pos = _positions(m, r)
            coords = [0] * len(tuples)
            for t, v in values.items():
                t = tuple(t)
                if t not in pos:
                    raise ShapeMismatch(f"{t} is not a strictly increasing {r}-tuple below {m}")
                coords[pos[t]] = int(v)
        else:
            coords = [int(v) for v in values]
            if len(coords) != len(tuples):
                raise ShapeMismatch(f"expected {len(tuples)} coordinates, got {len(coords)}")
        return cls(field, m, r, _normalize(field, coords))

    @property
    def tuples(self) -> tuple[IndexTuple, ...]:
        return index_tuples(self.m, self.r)

    def __getitem__(self, idx: Sequence[int]) -> int:
        """Coordinate at an arbitrary index sequence, antisymmetrically extended."""
        sign, t = _sort_sign(idx)
        if not sign:
            return 0
        v = self.coords[_positions(self.m, self.r)[t]]
        return v if sign > 0 else self.field.neg(v)

    def as_dict(self) -> dict[IndexTuple, int]:
        return dict(zip(self.tuples, self.coords))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "r": self.r,
            "coords": {",".join(map(str, t)): c for t, c in zip(self.tuples, self.coords) if c},
        }

    @classmethod
    def from_json(cls, field: FieldSpec, data) -> "PlueckerVector":
        if isinstance(data, str):
            data = json.loads(data)
        values = {tuple(int(i) for i in k.split(",")): v for k, v in data["coords"].items()}
        return cls.from_coords(field, data["m"], data["r"], values)


def _raw_pluecker(F: FieldSpec, basis: Sequence[Sequence[int]], m: int) -> list[int]:
    r = len(basis)
    if r == 1:
        return list(basis[0])
    if r == 2:
        a, b = basis
        mul, sub = F.mul, F.sub
        return [sub(mul(a[i], b[j]), mul(a[j], b[i])) for i, j in index_tuples(m, 2)]
    return [_det_rows(F, [[row[c] for c in t] for row in basis]) for t in index_tuples(m, r)]


def pluecker(H: Subspace) -> PlueckerVector:
    """Maximal minors of the canonical basis, normalized."""
    if H.rank == 0:
        raise ZeroRankSubspace("the zero subspace has no Pluecker vector")
    raw = _raw_pluecker(H.field, H.basis, H.ambient)
    return PlueckerVector(H.field, H.ambient, H.rank, _normalize(H.field, raw))


def dual_pluecker(W: Subspace) -> PlueckerVector:
    """Pluecker vector of the orthogonal complement of ``W``."""
    if W.rank == 0 or W.rank == W.ambient:
        raise ZeroRankSubspace("dual coordinates need 0 < rank W < m")
    return pluecker(orthogonal_complement(W))


def _pairing_raw(F: FieldSpec, a: Sequence[int], b: Sequence[int]) -> int:
    if F.h == 1:
        return sum(x * y for x, y in zip(a, b)) % F.p
    return F.sum(F.mul(x, y) for x, y in zip(a, b))


def pairing(Wstar: PlueckerVector, H: PlueckerVector) -> FieldElement:
    """Standard scalar product on the r-th exterior power."""
    if Wstar.field != H.field or Wstar.m != H.m or Wstar.r != H.r:
        raise ShapeMismatch("pairing needs vectors of the same field, m and r")
    return FieldElement(H.field, _pairing_raw(H.field, Wstar.coords, H.coords))


def meets(H: Subspace, W: Subspace, crosscheck: bool = True) -> bool:
    """Whether ``H ∩ W != 0`` for complementary ranks, decided by the pairing."""
    if H.ambient != W.ambient or H.rank + W.rank != H.ambient:
        raise ShapeMismatch("meets() needs rank H + rank W = m")
    if H.rank == 0 or W.rank == 0:
        return False
    verdict = not pairing(dual_pluecker(W), pluecker(H))
    if crosscheck and verdict != (intersection_rank(H, W) > 0):
        raise AssertionError("pairing verdict disagrees with direct intersection")
    return verdict


# -- quadratic relations -----------------------------------------------------

@dataclass(frozen=True)
class Relation:
    """A quadratic form ``sum(coef * H[a] * H[b])`` over sorted index tuples.

    For relations from :func:`relation_for_pair` the first term is the
    leading product ``H[i] * H[j]`` with coefficient +1.
    """

    terms: tuple[tuple[int, IndexTuple, IndexTuple], ...]
    i: Optional[IndexTuple] = None
    j: Optional[IndexTuple] = None

    @property
    def index_sum(self) -> Optional[int]:
        return None if self.i is None else sum(self.i)

    def evaluate(self, v: PlueckerVector) -> int:
        F = v.field
        acc = 0
        for coef, a, b in self.terms:
            prod = F.mul(v[a], v[b])
            acc = F.add(acc, F.mul(F.from_int(coef), prod))
        return acc

    def straddles(self) -> bool:
        """Every non-leading term pairs an index sum below N with one above."""
        N = self.index_sum
        return all(min(sum(a), sum(b)) < N < max(sum(a), sum(b)) for _, a, b in self.terms[1:])


def _collect(raw_terms) -> list[tuple[int, IndexTuple, IndexTuple]]:
    acc: dict[tuple[IndexTuple, IndexTuple], int] = {}
    order = []
    for coef, a, b in raw_terms:
        sa, ta = _sort_sign(a)
        sb, tb = _sort_sign(b)
        if not sa or not sb:
            continue
        if tb < ta:
            ta, tb = tb, ta
        key = (ta, tb)
        if key not in acc:
            order.append(key)
            acc[key] = 0
        acc[key] += coef * sa * sb
    return [(acc[k], k[0], k[1]) for k in order if acc[k]]


def _p1_terms(I: Sequence[int], J: Sequence[int]):
    # sum_n (-1)^n H[I + j_n] H[J without j_n]
    for n, jn in enumerate(J):
        yield (-1) ** n, tuple(I) + (jn,), tuple(J[:n]) + tuple(J[n + 1:])


def plucker_relations(m: int, r: int):
    """The relations (one per sorted pair of index groups) cutting out the Grassmannian.

    Each relation is alternating in the first r-1 and in the last r+1 indices,
    so distinct increasing groups represent all of them up to sign.
    """
    for I in itertools.combinations(range(m), r - 1):
        for J in itertools.combinations(range(m), r + 1):
            terms = _collect(_p1_terms(I, J))
            if terms:
                yield Relation(tuple(terms))


def relations_check(v: PlueckerVector) -> tuple[bool, Optional[Relation]]:
    """``(True, None)`` iff ``v`` is decomposable, else the first violated relation."""
    for rel in plucker_relations(v.m, v.r):
        if rel.evaluate(v):
            return False, rel
    return True, None


def relation_for_pair(i: Sequence[int], j: Sequence[int], m: Optional[int] = None) -> Relation:
    """The relation with leading term ``H[i] * H[j]`` for equal index sums.

    All other terms pair a tuple with index sum below ``sum(i)`` with one
    above it.
    """
    i, j = tuple(i), tuple(j)
    r = len(i)
    if len(j) != r or any(a >= b for a, b in zip(i, i[1:])) or any(a >= b for a, b in zip(j, j[1:])):
        raise ShapeMismatch("tuples must be strictly increasing and of equal length")
    if m is not None and max(i + j) >= m:
        raise ShapeMismatch(f"index out of range for m={m}")
    if i == j:
        raise IdenticalTuples("the relation degenerates to 0 = 0")
    if sum(i) != sum(j):
        raise UnequalIndexSums(f"{sum(i)} != {sum(j)}")
    ell = max(k for k, x in enumerate(i) if x not in j)
    # move i_ell to the last slot; the sign is absorbed when terms are sorted
    rest = i[:ell] + i[ell + 1:]
    J = (i[ell],) + j
    terms = _collect(_p1_terms(rest, J))
    lead = (min(i, j), max(i, j))
    k = next(n for n, (_, a, b) in enumerate(terms) if (a, b) == lead)
    lead_coef = terms[k][0]
    ordered = [terms[k]] + terms[:k] + terms[k + 1:]
    # scale so the leading coefficient is +1 (it is always +-1)
    ordered = [(c * lead_coef, a, b) for c, a, b in ordered]
    return Relation(tuple(ordered), i, j)
