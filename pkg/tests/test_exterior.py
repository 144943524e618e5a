import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from subspace_designs.errors import IdenticalTuples, ShapeMismatch, UnequalIndexSums
from subspace_designs.exterior import (
    PlueckerVector,
    dual_pluecker,
    index_tuples,
    meets,
    pairing,
    plucker_relations,
    pluecker,
    relation_for_pair,
    relations_check,
)
from subspace_designs.field import make_field
from subspace_designs.grassmann import enumerate_subspaces, random_subspace
from subspace_designs.linalg import intersection_rank, orthogonal_complement, subspace_from_rows

from oracles import minors, normalized, perm_sign

FIELDS = [make_field(2), make_field(3), make_field(5), make_field(2, 2), make_field(7)]


def test_pluecker_example_gf5():
    F = make_field(5)
    U = subspace_from_rows(F, [[1, 1, 1, 1], [1, 2, 4, 3]])
    v = pluecker(U)
    assert v.coords == (1, 3, 2, 2, 1, 4)
    assert relations_check(v) == (True, None)


@settings(max_examples=120, deadline=None)
@given(st.sampled_from(FIELDS), st.integers(1, 4), st.integers(0, 2**32))
def test_pluecker_matches_leibniz_minors(F, r, seed):
    m = 5
    U = random_subspace(F, m, r, random.Random(seed))
    # any basis gives the same projective point
    rng = random.Random(seed + 1)
    while True:
        mix = [[rng.randrange(F.q) for _ in range(r)] for _ in range(r)]
        rows = [[F.sum(F.mul(c, b[j]) for c, b in zip(row, U.basis)) for j in range(m)] for row in mix]
        if subspace_from_rows(F, rows, m).rank == r:
            break
    assert pluecker(U).coords == normalized(F, minors(F, rows, m))


def test_pluecker_is_injective_on_grassmannian():
    F = make_field(3)
    seen = {}
    for U in enumerate_subspaces(F, 4, 2):
        v = pluecker(U).coords
        assert v not in seen
        seen[v] = U
    assert len(seen) == 130


def test_antisymmetric_access():
    F = make_field(7)
    v = pluecker(random_subspace(F, 5, 3, random.Random(0)))
    for t in index_tuples(5, 3):
        for perm in itertools.permutations(t):
            expect = v[t] if perm_sign([t.index(x) for x in perm]) > 0 else F.neg(v[t])
            assert v[perm] == expect
    assert v[(0, 0, 1)] == 0


def test_json_roundtrip():
    F = make_field(2, 2)
    v = pluecker(random_subspace(F, 5, 2, random.Random(2)))
    data = v.to_json()
    assert all(c for c in data["coords"].values())
    assert PlueckerVector.from_json(F, data) == v
    assert PlueckerVector.from_coords(F, 5, 2, v.as_dict()) == v


def test_from_coords_errors():
    F = make_field(3)
    with pytest.raises(ShapeMismatch):
        PlueckerVector.from_coords(F, 4, 2, [1, 2, 3])
    with pytest.raises(ShapeMismatch):
        PlueckerVector.from_coords(F, 4, 2, {(1, 0): 1})


@pytest.mark.parametrize("F", [make_field(2), make_field(3)], ids=str)
def test_pairing_detects_meets_exhaustive(F):
    lines = list(enumerate_subspaces(F, 4, 2))
    duals = [dual_pluecker(W) for W in lines]
    vecs = [pluecker(H) for H in lines]
    for H, hv in zip(lines, vecs):
        for W, wv in zip(lines, duals):
            assert (not pairing(wv, hv)) == (intersection_rank(H, W) > 0)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(FIELDS), st.integers(1, 4), st.integers(0, 2**32))
def test_meets_complementary_ranks(F, r, seed):
    rng = random.Random(seed)
    H = random_subspace(F, 5, r, rng)
    W = random_subspace(F, 5, 5 - r, rng)
    assert meets(H, W) == (intersection_rank(H, W) > 0)


def test_dual_pluecker_is_pluecker_of_complement():
    F = make_field(5)
    W = random_subspace(F, 5, 3, random.Random(9))
    assert dual_pluecker(W) == pluecker(orthogonal_complement(W))


@pytest.mark.parametrize("m,r", [(4, 2), (5, 2), (5, 3), (6, 3)])
def test_relations_hold_on_decomposables(m, r):
    rng = random.Random(m * 10 + r)
    rels = list(plucker_relations(m, r))
    assert rels
    for F in (make_field(3), make_field(2, 2)):
        for _ in range(10):
            v = pluecker(random_subspace(F, m, r, rng))
            assert all(rel.evaluate(v) == 0 for rel in rels)


def test_relations_reject_non_decomposable():
    F = make_field(5)
    # e0^e1 + e2^e3 is not decomposable
    v = PlueckerVector.from_coords(F, 4, 2, {(0, 1): 1, (2, 3): 1})
    ok, rel = relations_check(v)
    assert not ok and rel.evaluate(v) != 0


def test_relation_for_pair_example():
    rel = relation_for_pair((0, 3), (1, 2))
    assert rel.terms[0] == (1, (0, 3), (1, 2))
    assert sorted(rel.terms[1:]) == sorted([(1, (0, 1), (2, 3)), (-1, (0, 2), (1, 3))])
    assert rel.straddles()


def _equal_sum_pairs(m, r):
    tups = index_tuples(m, r)
    for a, b in itertools.combinations(tups, 2):
        if sum(a) == sum(b):
            yield a, b


@pytest.mark.parametrize("m,r", [(4, 2), (5, 2), (5, 3), (6, 3)])
def test_relation_for_pair_vanishes_and_straddles(m, r):
    rng = random.Random(r * 100 + m)
    F = make_field(7)
    vecs = [pluecker(random_subspace(F, m, r, rng)) for _ in range(15)]
    for a, b in _equal_sum_pairs(m, r):
        rel = relation_for_pair(a, b, m)
        assert rel.terms[0][0] == 1 and {rel.terms[0][1], rel.terms[0][2]} == {a, b}
        assert rel.straddles()
        for v in vecs:
            assert rel.evaluate(v) == 0


def test_relation_for_pair_errors():
    with pytest.raises(IdenticalTuples):
        relation_for_pair((0, 3), (0, 3))
    with pytest.raises(UnequalIndexSums):
        relation_for_pair((0, 1), (0, 2))
    with pytest.raises(ShapeMismatch):
        relation_for_pair((0, 1), (0, 1, 2))
    with pytest.raises(ShapeMismatch):
        relation_for_pair((0, 5), (2, 3), m=5)
