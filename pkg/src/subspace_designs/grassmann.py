"""Enumeration and counting of the rank-r subspaces of F_q^m."""

from __future__ import annotations

import functools
import itertools
import math
import random
from typing import Iterator, Optional

from .errors import RankOutOfRange
from .field import FieldSpec
from .linalg import Subspace, _rank_rows, subspace_from_rows

__all__ = [
    "GrassmannIterator",
    "enumerate_subspaces",
    "gaussian_binomial",
    "grass_dim",
    "grass_degree",
    "random_subspace",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**8


def gaussian_binomial(m: int, r: int, q: int) -> int:
    """Number of rank-r subspaces of F_q^m."""
    if not 0 <= r <= m:
        raise RankOutOfRange(f"rank {r} outside [0, {m}]")
    if q < 2:
        raise ValueError("q must be at least 2")
    num = den = 1
    for i in range(r):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def grass_dim(r: int, s: int) -> int:
    return r * s


def grass_degree(r: int, s: int) -> int:
    """Degree of the Grassmannian of rank-r subspaces of an (r+s)-space."""
    num = math.factorial(r * s)
    for i in range(s):
        num *= math.factorial(i)
    den = 1
    for i in range(s):
        den *= math.factorial(r + i)
    deg, rem = divmod(num, den)
    assert rem == 0
    return deg


@functools.lru_cache(maxsize=None)
def _pivot_sets(m: int, r: int) -> tuple[tuple[int, ...], ...]:
    # colexicographic: compare by largest element first
    return tuple(sorted(itertools.combinations(range(m), r), key=lambda t: t[::-1]))


def _free_slots(pivots: tuple[int, ...], m: int) -> list[tuple[int, int]]:
    pivset = set(pivots)
    return [(i, c) for i, p in enumerate(pivots) for c in range(p + 1, m) if c not in pivset]


class GrassmannIterator:
    """Deterministic enumeration of all rank-r subspaces of F^m.

    Pivot sets are visited in colexicographic order; within a pivot set the
    free RREF entries run as a base-q odometer with the first free slot
    (row-major) as the least significant digit.  Positions are stable, so
    any range ``[start, stop)`` can be scanned independently.
    """

    def __init__(self, field: FieldSpec, m: int, r: int, start: int = 0, stop: Optional[int] = None):
        if not 0 <= r <= m:
            raise RankOutOfRange(f"rank {r} outside [0, {m}]")
        self.field = field
        self.m = m
        self.r = r
        self.total = gaussian_binomial(m, r, field.q)
        self.start = max(0, start)
        self.stop = self.total if stop is None else min(stop, self.total)

    def __len__(self) -> int:
        return max(0, self.stop - self.start)

    def _blocks(self):
        pos = 0
        q = self.field.q
        for piv in _pivot_sets(self.m, self.r):
            slots = _free_slots(piv, self.m)
            size = q ** len(slots)
            yield pos, piv, slots, size
            pos += size

    def _build(self, piv, slots, code: int) -> Subspace:
        q = self.field.q
        rows = [[0] * self.m for _ in range(self.r)]
        for i, p in enumerate(piv):
            rows[i][p] = 1
        for i, c in slots:
            code, d = divmod(code, q)
            rows[i][c] = d
        return Subspace(self.field, self.m, tuple(map(tuple, rows)))

    def __getitem__(self, index: int) -> Subspace:
        if index < 0:
            index += self.total
        if not 0 <= index < self.total:
            raise IndexError(index)
        for pos, piv, slots, size in self._blocks():
            if index < pos + size:
                return self._build(piv, slots, index - pos)
        raise IndexError(index)  # unreachable

    def __iter__(self) -> Iterator[Subspace]:
        for pos, piv, slots, size in self._blocks():
            lo = max(self.start, pos)
            hi = min(self.stop, pos + size)
            for code in range(lo - pos, hi - pos):
                yield self._build(piv, slots, code)
            if pos + size >= self.stop:
                break

    def split(self, parts: int) -> list["GrassmannIterator"]:
        """Contiguous sub-ranges covering this iterator, in order."""
        n = len(self)
        parts = max(1, min(parts, n or 1))
        bounds = [self.start + n * k // parts for k in range(parts + 1)]
        return [GrassmannIterator(self.field, self.m, self.r, a, b) for a, b in zip(bounds, bounds[1:])]


def enumerate_subspaces(field: FieldSpec, m: int, r: int) -> GrassmannIterator:
    return GrassmannIterator(field, m, r)


def random_subspace(field: FieldSpec, m: int, r: int, rng: random.Random) -> Subspace:
    """Uniform rank-r subspace: random r x m matrix, rejected until full rank."""
    if not 0 <= r <= m:
        raise RankOutOfRange(f"rank {r} outside [0, {m}]")
    q = field.q
    while True:
        rows = [[rng.randrange(q) for _ in range(m)] for _ in range(r)]
        if _rank_rows(field, rows, m) == r:
            return subspace_from_rows(field, rows, m)
