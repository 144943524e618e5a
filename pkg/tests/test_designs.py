import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from subspace_designs import designs
from subspace_designs.constructions import CoefficientScheme, build_design
from subspace_designs.designs import (
    VerifyMode,
    closed_field_bound,
    crosscheck_strong_poly,
    dualize,
    find_blocker_exhaustive,
    find_blocker_greedy,
    hp_check,
    is_generator_set,
    blocker_capacity,
    lower_bound,
    measure,
    measure_strong,
    measure_weak,
    recheck_report,
    report_to_json,
    strong_count,
    weak_count,
)
from subspace_designs.errors import (
    BudgetExceeded,
    HypothesisViolated,
    NonPolynomialScheme,
    ParameterOutOfRange,
    ShapeMismatch,
)
from subspace_designs.field import make_field
from subspace_designs.grassmann import enumerate_subspaces, random_subspace
from subspace_designs.linalg import subspace_from_rows

from oracles import brute_subspaces, span

F2, F3, F5, F7 = (make_field(p) for p in (2, 3, 5, 7))


def log_q(q, size):
    """Rank of a subspace with ``size`` vectors."""
    r = 0
    while q**r < size:
        r += 1
    return r


def brute_measures(F, members, s):
    """(A_weak, A_strong) from explicit vector sets over all rank-s subspaces."""
    m = members[0].ambient
    sets = [span(F, H.basis, m) for H in members]
    best_w = best_s = 0
    for W in brute_subspaces(F, m, s):
        meets = [len(S & W) for S in sets]
        best_w = max(best_w, sum(1 for k in meets if k > 1))
        best_s = max(best_s, sum(log_q(F.q, k) for k in meets))
    return best_w, best_s


@pytest.fixture(scope="module")
def secant5():
    return build_design(CoefficientScheme("secant", 2, 2, F5, 2))


@pytest.fixture(scope="module")
def tangent7():
    return build_design(CoefficientScheme("tangent", 2, 2, F7))


@pytest.mark.parametrize("seed", range(6))
def test_measures_against_vector_sets(seed):
    rng = random.Random(seed)
    F = F2 if seed % 2 else F3
    members = [random_subspace(F, 4, 2, rng) for _ in range(4)]
    aw, ww = measure_weak(members, 2)
    ast, ws = measure_strong(members, 2)
    assert (aw, ast) == brute_measures(F, members, 2)
    assert weak_count(members, ww) == aw and strong_count(members, ws) == ast


def test_weak_count_strong_count_simple():
    H = subspace_from_rows(F2, [[1, 0, 0, 0], [0, 1, 0, 0]])
    assert weak_count([H, H], H) == 2
    assert strong_count([H, H], H) == 4


def test_secant_gf5_values(secant5):
    rep = measure(secant5.subspaces, hp=True)
    assert rep.A_weak == 4 and rep.A_strong == 4
    assert rep.hp.is_generator and rep.hp.blocker is None


def test_tangent_gf7_values(tangent7):
    rep = measure(tangent7.subspaces)
    assert rep.A_weak == 4 and rep.A_strong == 4


def test_duality_invariance(secant5, tangent7):
    for design in (secant5, tangent7):
        a = measure(design.subspaces)
        b = measure(dualize(design.subspaces))
        assert (a.A_weak, a.A_strong) == (b.A_weak, b.A_strong)
        assert dualize(dualize(design.subspaces)) == design.subspaces


def test_sampled_never_exceeds_exhaustive(secant5):
    ex = measure(secant5.subspaces)
    for seed in range(3):
        sm = measure(secant5.subspaces, mode=VerifyMode.sampled(50, seed))
        assert sm.is_lower_bound
        assert sm.A_weak <= ex.A_weak and sm.A_strong <= ex.A_strong


def test_parallel_scan_matches_serial(secant5, monkeypatch):
    serial = measure(secant5.subspaces)
    monkeypatch.setattr(designs, "_PARALLEL_MIN", 10)
    par = measure(secant5.subspaces, threads=2)
    assert (par.A_weak, par.witness_weak, par.A_strong, par.witness_strong) == (
        serial.A_weak, serial.witness_weak, serial.A_strong, serial.witness_strong)


def test_verify_mode_parse():
    assert VerifyMode.parse("exhaustive").exhaustive
    m = VerifyMode.parse("sampled:100:7")
    assert (m.kind, m.count, m.seed) == ("sampled", 100, 7)
    assert str(m) == "sampled:100:7"
    with pytest.raises(ValueError):
        VerifyMode.parse("random")


def test_budget():
    members = [random_subspace(F5, 4, 2, random.Random(0))]
    with pytest.raises(BudgetExceeded):
        measure_weak(members, 2, budget=100)
    with pytest.raises(BudgetExceeded):
        find_blocker_exhaustive(members, budget=100)


def test_report_json_rechecks(secant5):
    rep = measure(secant5.subspaces, hp=True)
    data = report_to_json(rep, secant5.subspaces)
    assert recheck_report(data) == (True, [])
    data["A_weak"] = 3
    ok, problems = recheck_report(data)
    assert not ok and problems


# -- blockers and generator sets ---------------------------------------------

def brute_blocker_exists(F, members):
    m, r = members[0].ambient, members[0].rank
    sets = [span(F, H.basis, m) for H in members]
    return any(all(len(S & W) > 1 for S in sets) for W in brute_subspaces(F, m, m - r))


@pytest.mark.parametrize("seed", range(12))
def test_blocker_matches_brute_force(seed):
    rng = random.Random(100 + seed)
    F = F2 if seed < 8 else F3
    members = [random_subspace(F, 4, 2, rng) for _ in range(rng.choice([2, 3, 4]))]
    B = find_blocker_exhaustive(members, codim=2)
    assert (B is not None) == brute_blocker_exists(F, members)
    if B is not None:
        assert B.rank == 2 and all(weak_count([H], B) for H in members)


def test_common_point_gives_blocker():
    rng = random.Random(4)
    p = [1, 2, 0, 1]
    members = []
    while len(members) < 4:
        H = subspace_from_rows(F3, [p, [rng.randrange(3) for _ in range(4)]], 4)
        if H.rank == 2:
            members.append(H)
    assert find_blocker_exhaustive(members) is not None


@pytest.mark.parametrize("seed", range(10))
def test_generator_iff_no_blocker(seed):
    rng = random.Random(200 + seed)
    F = F2 if seed % 2 else F3
    members = [random_subspace(F, 4, 2, rng) for _ in range(F.q)]
    gen = is_generator_set(members)
    assert gen.is_generator == (find_blocker_exhaustive(members) is None)
    assert hp_check(members).is_generator == gen.is_generator


def test_two_lines_not_hp():
    a = subspace_from_rows(F2, [[1, 0, 0, 0], [0, 1, 0, 0]])
    b = subspace_from_rows(F2, [[0, 0, 1, 0], [0, 0, 0, 1]])
    v = hp_check([a, b])
    assert not v.is_generator and v.blocker is not None
    gen = is_generator_set([a, b], k=1)
    assert not gen.is_generator and gen.failing_plane is not None


def test_members_in_a_hyperplane_not_generator():
    rng = random.Random(3)
    members = []
    while len(members) < 5:
        H = subspace_from_rows(F5, [[0] + [rng.randrange(5) for _ in range(3)] for _ in range(2)], 4)
        if H.rank == 2:
            members.append(H)
    assert not is_generator_set(members).is_generator


def test_hp_check_flags_large_families(tangent7):
    extra = tangent7.subspaces + [random_subspace(F7, 4, 2, random.Random(1))]
    v = hp_check(extra)
    assert v.equivalence_hypothesis_failed
    assert v.is_generator == is_generator_set(extra).is_generator


def test_generator_set_rank_check(secant5):
    with pytest.raises(ShapeMismatch):
        is_generator_set(secant5.subspaces, k=2)


def test_secant_subsets(secant5):
    members = secant5.subspaces
    assert is_generator_set(members).checked == 156
    for sub in itertools.combinations(members, 3):
        W = find_blocker_greedy(list(sub))
        assert all(weak_count([H], W) for H in sub)


def test_any_a_plus_one_members_of_weak_design_are_hp(tangent7):
    # A_weak = 4 < q = 7, so every 5 members should be higgledy-piggledy
    for sub in itertools.combinations(tangent7.subspaces, 5):
        assert hp_check(list(sub)).is_generator


# -- greedy blocker ----------------------------------------------------------

@pytest.mark.parametrize("q", [2, 3, 4, 5])
@pytest.mark.parametrize("line_base", ["exhaustive", "inductive"])
def test_greedy_three_lines(q, line_base):
    F = make_field(2, 2) if q == 4 else make_field(q)
    rng = random.Random(q)
    for _ in range(10):
        members = [random_subspace(F, 4, 2, rng) for _ in range(3)]
        W = find_blocker_greedy(members, line_base=line_base)
        assert W.rank == 2 and all(weak_count([H], W) for H in members)


@pytest.mark.parametrize("line_base", ["exhaustive", "inductive"])
def test_greedy_six_planes_pg52(line_base):
    rng = random.Random(8)
    assert blocker_capacity(5, 2) == 6
    for _ in range(5):
        members = [random_subspace(F2, 6, 3, rng) for _ in range(6)]
        W = find_blocker_greedy(members, line_base=line_base)
        assert W.rank == 3 and all(weak_count([H], W) for H in members)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([F2, F3, F5]), st.integers(3, 6), st.data())
def test_greedy_always_blocks(F, m, data):
    r = data.draw(st.integers(2, m - 1))
    d, k = m - 1, r - 1
    n = data.draw(st.integers(1, blocker_capacity(d, k)))
    rng = random.Random(data.draw(st.integers(0, 2**32)))
    members = [random_subspace(F, m, r, rng) for _ in range(n)]
    W = find_blocker_greedy(members, line_base="inductive")
    assert W.rank == m - r and all(weak_count([H], W) for H in members)


def test_greedy_single_member_and_hypothesis():
    H = random_subspace(F5, 4, 2, random.Random(0))
    assert weak_count([H], find_blocker_greedy([H])) == 1
    with pytest.raises(HypothesisViolated):
        find_blocker_greedy([random_subspace(F5, 4, 2, random.Random(i)) for i in range(4)])


# -- bounds ------------------------------------------------------------------

def test_lower_bound_values():
    assert lower_bound(4, 1) == 6
    assert lower_bound(4, 1, 9) == 6
    assert lower_bound(3, 1, 5) == 4
    assert lower_bound(3, 1, 2) == 3
    assert closed_field_bound(3, 1) == 5
    assert closed_field_bound(4, 1) == 7
    for d in range(2, 30):
        assert blocker_capacity(d, 1) == d // 2 + d - 1
    with pytest.raises(ParameterOutOfRange):
        lower_bound(3, 3)


def test_below_floor_is_never_hp():
    # 2 lines in PG(3, q) are below min{q, 3} + 1
    rng = random.Random(6)
    for F in (F2, F3):
        for _ in range(5):
            members = [random_subspace(F, 4, 2, rng) for _ in range(2)]
            assert not is_generator_set(members).is_generator


# -- polynomial cross-check --------------------------------------------------

def test_poly_crosscheck_random(tangent7):
    rng = random.Random(1)
    for _ in range(30):
        res = crosscheck_strong_poly(tangent7, random_subspace(F7, 4, 2, rng))
        assert not res.zero_determinant
        assert res.rank_sum <= res.multiplicity_sum <= res.det_degree <= res.degree_bound == 4


def test_poly_crosscheck_aligned(tangent7):
    for t0 in range(7):
        H = tangent7.members[t0][0]
        res = crosscheck_strong_poly(tangent7, H)
        assert res.kernel_ranks[t0] == 2
        assert res.multiplicities[t0] >= 2


def test_poly_crosscheck_s1():
    F = make_field(11)
    design = build_design(CoefficientScheme("tangent", 3, 1, F))
    for W in itertools.islice(enumerate_subspaces(F, 4, 1), 0, 1331, 37):
        res = crosscheck_strong_poly(design, W)
        assert res.det_degree <= 3


def test_poly_crosscheck_diverted():
    F = make_field(7)
    design = build_design(CoefficientScheme("diverted", 2, 3, F, 2))
    rng = random.Random(3)
    for _ in range(20):
        res = crosscheck_strong_poly(design, random_subspace(F, 5, 3, rng))
        if not res.zero_determinant:
            assert res.rank_sum <= res.multiplicity_sum <= res.det_degree <= 3 * 2


def test_poly_crosscheck_rejects_secant(secant5):
    with pytest.raises(NonPolynomialScheme):
        crosscheck_strong_poly(secant5, secant5.subspaces[0])
