"""Brute-force reference implementations shared by the tests.

Nothing here touches the package's elimination or table code: field
arithmetic is schoolbook polynomial multiplication, determinants are
Leibniz sums and subspaces are explicit sets of vectors.
"""

import itertools


def poly_mulmod(a, b, modulus, p):
    """Multiply coefficient lists (constant first) and reduce by a monic modulus."""
    h = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] = (prod[i + j] + x * y) % p
    for k in range(len(prod) - 1, h - 1, -1):
        c = prod[k]
        if c:
            for i, m in enumerate(modulus):
                prod[k - h + i] = (prod[k - h + i] - c * m) % p
    out = prod[:h] + [0] * (h - len(prod[:h]))
    return out


def to_digits(a, p, h):
    out = []
    for _ in range(h):
        a, r = divmod(a, p)
        out.append(r)
    return out


def from_digits(d, p):
    return sum(c * p**i for i, c in enumerate(d))


class SlowField:
    """GF(p^h) by direct polynomial arithmetic on canonical integers."""

    def __init__(self, p, h, modulus):
        self.p, self.h, self.modulus, self.q = p, h, list(modulus), p**h

    def add(self, a, b):
        da, db = to_digits(a, self.p, self.h), to_digits(b, self.p, self.h)
        return from_digits([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a):
        return from_digits([(-x) % self.p for x in to_digits(a, self.p, self.h)], self.p)

    def mul(self, a, b):
        d = poly_mulmod(to_digits(a, self.p, self.h), to_digits(b, self.p, self.h), self.modulus, self.p)
        return from_digits(d, self.p)


def has_root_or_small_factor(coeffs, p):
    """True if a monic GF(p) polynomial of degree <= 3 has a root (so it is reducible)."""
    return any(sum(c * pow(x, i, p) for i, c in enumerate(coeffs)) % p == 0 for x in range(p))


def perm_sign(perm):
    inv = sum(1 for a, b in itertools.combinations(perm, 2) if a > b)
    return -1 if inv % 2 else 1


def leibniz_det(F, rows):
    n = len(rows)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = 1
        for i, j in enumerate(perm):
            term = F.mul(term, rows[i][j])
        total = F.add(total, term if perm_sign(perm) > 0 else F.neg(term))
    return total


def minors(F, rows, m):
    """All maximal minors in lexicographic column order."""
    r = len(rows)
    return [leibniz_det(F, [[row[c] for c in cols] for row in rows]) for cols in itertools.combinations(range(m), r)]


def normalized(F, coords):
    lead = next((c for c in coords if c), None)
    if lead is None:
        return tuple(coords)
    inv = next(x for x in range(1, F.q) if F.mul(lead, x) == 1)
    return tuple(F.mul(inv, c) for c in coords)


def span(F, rows, m):
    """The set of all vectors in the span, as tuples."""
    vecs = {tuple([0] * m)}
    for row in rows:
        new = set()
        for v in vecs:
            for c in range(F.q):
                new.add(tuple(F.add(x, F.mul(c, y)) for x, y in zip(v, row)))
        vecs = new
    return frozenset(vecs)


def all_vectors(q, m):
    return itertools.product(range(q), repeat=m)


def brute_subspaces(F, m, r):
    """Every rank-r subspace of F^m as a frozenset of vectors, found by spanning r-tuples."""
    zero = tuple([0] * m)
    nonzero = [v for v in all_vectors(F.q, m) if v != zero]
    seen = set()
    target = F.q**r
    for combo in itertools.combinations(nonzero, r):
        S = span(F, combo, m)
        if len(S) == target:
            seen.add(S)
    return seen


def rank_by_size(F, rows, m):
    size = len(span(F, rows, m))
    r = 0
    while F.q**r < size:
        r += 1
    return r
