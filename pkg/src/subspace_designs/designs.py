"""Measurement and certification of subspace families.

All measurements scan candidate subspaces ``W`` either exhaustively (the whole
Grassmannian, in :class:`~subspace_designs.grassmann.GrassmannIterator` order)
or on a seeded uniform sample.  Sampled results are lower bounds and are
flagged as such.  Witnesses are the first maximizer in scan order.
"""

from __future__ import annotations

import logging
import math
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field as dc_field
from typing import Optional, Sequence

from .constructions import Design
from .errors import (
    AmbientMismatch,
    BaseCaseBudgetExceeded,
    BudgetExceeded,
    HypothesisViolated,
    NonPolynomialScheme,
    ParameterOutOfRange,
    ShapeMismatch,
)
from .exterior import _pairing_raw, pluecker
from .field import FieldSpec
from .grassmann import GrassmannIterator, gaussian_binomial, random_subspace
from .linalg import (
    Subspace,
    _kernel_rows,
    _rank_rows,
    intersect,
    intersection_rank,
    join,
    orthogonal_complement,
    subspace_from_rows,
)
from .polyalg import build_M, polymat_det, reduce_for_M, root_multiplicity

log = logging.getLogger(__name__)

__all__ = [
    "VerifyMode",
    "EXHAUSTIVE",
    "DEFAULT_BUDGET",
    "DesignReport",
    "HPVerdict",
    "GeneratorVerdict",
    "PolyCrosscheck",
    "measure_weak",
    "measure_strong",
    "measure",
    "find_blocker_exhaustive",
    "find_blocker_greedy",
    "is_generator_set",
    "hp_check",
    "dualize",
    "blocker_capacity",
    "lower_bound",
    "closed_field_bound",
    "crosscheck_strong_poly",
    "report_to_json",
    "recheck_report",
]

DEFAULT_BUDGET = 10**7
# smaller scans are not worth a process pool
_PARALLEL_MIN = 5000


@dataclass(frozen=True)
class VerifyMode:
    kind: str = "exhaustive"
    count: int = 0
    seed: int = 0

    @classmethod
    def parse(cls, text: str) -> "VerifyMode":
        """``exhaustive`` or ``sampled:N:SEED``."""
        parts = text.split(":")
        if parts == ["exhaustive"]:
            return cls()
        if parts[0] == "sampled" and len(parts) in (2, 3):
            return cls("sampled", int(parts[1]), int(parts[2]) if len(parts) == 3 else 0)
        raise ValueError(f"unknown verify mode {text!r}")

    @classmethod
    def sampled(cls, count: int, seed: int = 0) -> "VerifyMode":
        return cls("sampled", count, seed)

    @property
    def exhaustive(self) -> bool:
        return self.kind == "exhaustive"

    def __str__(self):
        return "exhaustive" if self.exhaustive else f"sampled:{self.count}:{self.seed}"


EXHAUSTIVE = VerifyMode()


def _uniform_rank(members: Sequence[Subspace]) -> tuple[FieldSpec, int, int]:
    if not members:
        raise ShapeMismatch("empty member list")
    F, m, r = members[0].field, members[0].ambient, members[0].rank
    for H in members:
        if H.ambient != m or H.field != F:
            raise AmbientMismatch("members live in different spaces")
        if H.rank != r:
            raise ShapeMismatch("members must all have the same rank")
    return F, m, r


def _candidates(F: FieldSpec, m: int, rank: int, mode: VerifyMode, budget: int):
    """Candidate list description: an iterator range or a sampled basis list."""
    if mode.exhaustive:
        total = gaussian_binomial(m, rank, F.q)
        if total > budget:
            raise BudgetExceeded(f"{total} candidate subspaces exceed the budget {budget}")
        return GrassmannIterator(F, m, rank)
    rng = random.Random(mode.seed)
    return [random_subspace(F, m, rank, rng) for _ in range(mode.count)]


# -- the scan kernel ---------------------------------------------------------

def _scan_chunk(members: Sequence[Subspace], candidates, crosscheck: bool):
    """Best weak and strong counts over ``candidates`` (first maximizers)."""
    F, m, r = _uniform_rank(members)
    vecs = [pluecker(H).coords for H in members]
    bases = [list(H.basis) for H in members]
    best_w = best_s = -1
    wit_w = wit_s = None
    for W in candidates:
        wstar = pluecker(orthogonal_complement(W)).coords
        weak = strong = 0
        for vec, basis in zip(vecs, bases):
            hit = not _pairing_raw(F, wstar, vec)
            if hit or crosscheck:
                rk = r + W.rank - _rank_rows(F, basis + list(W.basis), m)
                if crosscheck and hit != (rk > 0):
                    raise AssertionError(f"pairing and intersection disagree at W={W}")
                if hit:
                    weak += 1
                    strong += rk
        if weak > best_w:
            best_w, wit_w = weak, W
        if strong > best_s:
            best_s, wit_s = strong, W
    return best_w, wit_w, best_s, wit_s


def _scan(members, s, mode, budget, threads, crosscheck):
    F, m, r = _uniform_rank(members)
    if r + s != m:
        raise AmbientMismatch(f"need m = r + s, got m={m}, r={r}, s={s}")
    cands = _candidates(F, m, s, mode, budget)
    if threads <= 1 or len(cands) < _PARALLEL_MIN:
        return _scan_chunk(members, cands, crosscheck)
    if isinstance(cands, GrassmannIterator):
        chunks = cands.split(threads * 4)
    else:
        step = math.ceil(len(cands) / (threads * 4))
        chunks = [cands[i:i + step] for i in range(0, len(cands), step)]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_scan_chunk, list(members), c, crosscheck) for c in chunks]
        results = [f.result() for f in futures]
    # reduce in range order so the witness is independent of completion order
    best_w = best_s = -1
    wit_w = wit_s = None
    for bw, ww, bs, ws in results:
        if bw > best_w:
            best_w, wit_w = bw, ww
        if bs > best_s:
            best_s, wit_s = bs, ws
    return best_w, wit_w, best_s, wit_s


def measure_weak(members: Sequence[Subspace], s: int, mode: VerifyMode = EXHAUSTIVE,
                 budget: int = DEFAULT_BUDGET, threads: int = 1,
                 crosscheck: bool = True) -> tuple[int, Subspace]:
    """Max over rank-s ``W`` of the number of members meeting ``W``."""
    a, w, _, _ = _scan(members, s, mode, budget, threads, crosscheck)
    return a, w


def measure_strong(members: Sequence[Subspace], s: int, mode: VerifyMode = EXHAUSTIVE,
                   budget: int = DEFAULT_BUDGET, threads: int = 1,
                   crosscheck: bool = True) -> tuple[int, Subspace]:
    """Max over rank-s ``W`` of ``sum(rank(H ∩ W))``."""
    _, _, a, w = _scan(members, s, mode, budget, threads, crosscheck)
    return a, w


def weak_count(members: Sequence[Subspace], W: Subspace) -> int:
    return sum(1 for H in members if intersection_rank(H, W) > 0)


def strong_count(members: Sequence[Subspace], W: Subspace) -> int:
    return sum(intersection_rank(H, W) for H in members)


# -- blockers and generator sets ---------------------------------------------

def find_blocker_exhaustive(members: Sequence[Subspace], codim: Optional[int] = None,
                            budget: int = DEFAULT_BUDGET) -> Optional[Subspace]:
    """A rank-(m-r) subspace meeting every member, or ``None``.

    ``codim`` is the projective codimension ``k+1 = r`` and may be omitted.
    Candidates ``W`` are found through their dual coordinates: the scan runs
    over rank-r subspaces ``U = W^⊥`` and keeps those whose Pluecker vector
    is orthogonal to every member's.  Each hit is re-checked by direct rank
    computation.
    """
    F, m, r = _uniform_rank(members)
    if codim is not None and codim != r:
        raise ParameterOutOfRange(f"codimension must be k+1 = {r} for rank-{r} members")
    if r == m:
        return None
    total = gaussian_binomial(m, r, F.q)
    if total > budget:
        raise BudgetExceeded(f"{total} candidate subspaces exceed the budget {budget}")
    vecs = [pluecker(H).coords for H in members]
    for U in GrassmannIterator(F, m, r):
        wstar = pluecker(U).coords
        if all(not _pairing_raw(F, wstar, v) for v in vecs):
            W = orthogonal_complement(U)
            if any(intersection_rank(H, W) == 0 for H in members):
                raise AssertionError("pairing reported a blocker that misses a member")
            return W
    return None


@dataclass(frozen=True)
class GeneratorVerdict:
    is_generator: bool
    failing_plane: Optional[Subspace] = None
    checked: int = 0


def is_generator_set(members: Sequence[Subspace], k: Optional[int] = None,
                     mode: VerifyMode = EXHAUSTIVE, budget: int = DEFAULT_BUDGET) -> GeneratorVerdict:
    """Whether every co-k-subspace is spanned by its intersections with the members."""
    F, m, r = _uniform_rank(members)
    if k is None:
        k = r - 1
    if k + 1 != r:
        raise ShapeMismatch(f"members of rank {r} are projective {r - 1}-subspaces, not {k}")
    checked = 0
    for P in _candidates(F, m, m - k, mode, budget):
        checked += 1
        span = subspace_from_rows(F, [], m)
        for H in members:
            span = join(span, intersect(P, H))
            if span.rank == P.rank:
                break
        if span.rank != P.rank:
            return GeneratorVerdict(False, P, checked)
    return GeneratorVerdict(True, None, checked)


@dataclass(frozen=True)
class HPVerdict:
    is_generator: bool
    blocker: Optional[Subspace]
    equivalence_hypothesis_failed: bool = False
    failing_plane: Optional[Subspace] = None


def hp_check(members: Sequence[Subspace], budget: int = DEFAULT_BUDGET) -> HPVerdict:
    """Higgledy-piggledy verdict.

    With at most ``q`` members the family is higgledy-piggledy exactly when
    no blocker exists.  Larger families are decided by the generator-set
    scan and flagged, since a blocker no longer rules the property out.
    """
    F, m, r = _uniform_rank(members)
    blocker = find_blocker_exhaustive(members, budget=budget)
    if len(members) <= F.q:
        return HPVerdict(blocker is None, blocker)
    gen = is_generator_set(members, r - 1, budget=budget)
    return HPVerdict(gen.is_generator, blocker, True, gen.failing_plane)


def dualize(members: Sequence[Subspace]) -> list[Subspace]:
    return [orthogonal_complement(H) for H in members]


# -- lower bounds ------------------------------------------------------------

def blocker_capacity(d: int, k: int) -> int:
    """``sum_{i=0..k} floor((d-k+i)/(i+1))``: any family of at most this many
    projective k-subspaces of PG(d, q) has a blocker."""
    return sum((d - k + i) // (i + 1) for i in range(k + 1))


def lower_bound(d: int, k: int, q: Optional[int] = None) -> int:
    """Least possible size of a higgledy-piggledy set of k-subspaces in PG(d, q).

    ``q=None`` stands for an infinite field.
    """
    if not 0 <= k < d:
        raise ParameterOutOfRange(f"need 0 <= k < d, got d={d}, k={k}")
    total = blocker_capacity(d, k)
    if k == 1:
        assert total == d // 2 + d - 1
    return (total if q is None else min(q, total)) + 1


def closed_field_bound(d: int, k: int) -> int:
    """Least size over an algebraically closed field: ``(k+1)(d-k)+1``."""
    if not 0 <= k < d:
        raise ParameterOutOfRange(f"need 0 <= k < d, got d={d}, k={k}")
    return (k + 1) * (d - k) + 1


def _hyperplane_through(S: Subspace) -> Subspace:
    a = orthogonal_complement(S).basis[0]
    return subspace_from_rows(S.field, _kernel_rows(S.field, [a], S.ambient), S.ambient)


def _greedy(F: FieldSpec, n: int, members: list[Subspace], k: int, budget: int, line_base: str) -> Subspace:
    if k == 0:
        span = subspace_from_rows(F, [row for H in members for row in H.basis], n)
        return _hyperplane_through(span)
    if k == 1 and line_base == "exhaustive":
        total = gaussian_binomial(n, n - 2, F.q)
        if total > budget:
            raise BaseCaseBudgetExceeded(f"{total} transversal candidates exceed the budget {budget}")
        for W in GrassmannIterator(F, n, n - 2):
            if all(intersection_rank(H, W) for H in members):
                return W
        raise AssertionError("no transversal found below the blocker capacity")
    g = (n - 1) // (k + 1)
    first, rest = members[:g], members[g:]
    span = subspace_from_rows(F, [row for H in first for row in H.basis], n)
    plane = _hyperplane_through(span)
    traces = []
    for H in rest:
        T = intersect(plane, H)
        L = subspace_from_rows(F, T.basis[:k], n)
        traces.append(subspace_from_rows(F, [plane.coordinates(v) for v in L.basis], n - 1))
    W_local = _greedy(F, n - 1, traces, k - 1, budget, line_base)
    rows = [[F.sum(F.mul(c, b[j]) for c, b in zip(row, plane.basis)) for j in range(n)] for row in W_local.basis]
    return subspace_from_rows(F, rows, n)


def find_blocker_greedy(members: Sequence[Subspace], budget: int = DEFAULT_BUDGET,
                        line_base: str = "exhaustive") -> Subspace:
    """Blocker built by induction on k for families below the blocker capacity.

    The first ``floor(d/(k+1))`` members are put in a hyperplane; the others
    are cut down to (k-1)-subspaces inside it and the construction recurses.
    Lines (k=1) are handled by an exhaustive transversal search unless
    ``line_base="inductive"``, which recurses down to points instead.
    """
    F, m, r = _uniform_rank(members)
    d, k = m - 1, r - 1
    if not 0 <= k < d:
        raise ParameterOutOfRange(f"need 0 <= k < d, got d={d}, k={k}")
    if len(members) > blocker_capacity(d, k):
        raise HypothesisViolated(f"{len(members)} members exceed the bound {blocker_capacity(d, k)}")
    if line_base not in ("exhaustive", "inductive"):
        raise ValueError(f"unknown line_base {line_base!r}")
    W = _greedy(F, m, list(members), k, budget, line_base)
    if W.rank != m - r or any(intersection_rank(H, W) == 0 for H in members):
        raise AssertionError("greedy blocker failed post-verification")
    return W


# -- polynomial cross-check --------------------------------------------------

@dataclass(frozen=True)
class PolyCrosscheck:
    rank_sum: int
    multiplicity_sum: int
    det_degree: Optional[int]
    degree_bound: int
    zero_determinant: bool = False
    kernel_ranks: dict = dc_field(default_factory=dict)
    multiplicities: dict = dc_field(default_factory=dict)


def crosscheck_strong_poly(design: Design, W: Subspace) -> PolyCrosscheck:
    """Compare ``sum_t rank(H(t)^⊥ ∩ W^⊥)`` with root data of ``det M(X)``."""
    scheme = design.scheme
    if not scheme.is_polynomial():
        raise NonPolynomialScheme(f"{scheme.family} has h(i, n) != 0 for some i < n")
    F, r, s, d = scheme.field, scheme.r, scheme.s, scheme.d
    if W.rank != s or W.ambient != scheme.m:
        raise ShapeMismatch(f"W must have rank {s} in F^{scheme.m}")
    Wp = orthogonal_complement(W)
    M = build_M(reduce_for_M(F, Wp.basis), scheme)
    det = polymat_det(M)
    kernel_ranks, mults = {}, {}
    rank_sum = 0
    for t, (H, _) in sorted(design.members.items()):
        direct = intersection_rank(orthogonal_complement(H), Wp)
        kr = r - _rank_rows(F, M.evaluate(t), r)
        if kr != direct:
            raise AssertionError(f"kernel of M({t}) has rank {kr}, expected {direct}")
        kernel_ranks[t] = kr
        rank_sum += direct
    bound = s * (d - s + 1)
    if det.is_zero():
        log.warning("det M(X) vanishes identically for W=%s; the design fails here", W)
        return PolyCrosscheck(rank_sum, 0, None, bound, True, kernel_ranks, {})
    for t in range(F.q):
        mults[t] = root_multiplicity(det, t)
        if mults[t] < kernel_ranks[t]:
            raise AssertionError(f"root multiplicity {mults[t]} below kernel rank at t={t}")
    msum = sum(mults.values())
    if not rank_sum <= msum <= det.degree <= bound:
        raise AssertionError(f"chain fails: {rank_sum} <= {msum} <= {det.degree} <= {bound}")
    return PolyCrosscheck(rank_sum, msum, det.degree, bound, False, kernel_ranks, mults)


# -- reports -----------------------------------------------------------------

@dataclass
class DesignReport:
    n_members: int
    s: int
    mode: VerifyMode
    A_weak: Optional[int] = None
    witness_weak: Optional[Subspace] = None
    A_strong: Optional[int] = None
    witness_strong: Optional[Subspace] = None
    hp: Optional[HPVerdict] = None

    @property
    def is_lower_bound(self) -> bool:
        return not self.mode.exhaustive


def measure(members: Sequence[Subspace], s: Optional[int] = None, weak: bool = True,
            strong: bool = True, hp: bool = False, mode: VerifyMode = EXHAUSTIVE,
            budget: int = DEFAULT_BUDGET, threads: int = 1) -> DesignReport:
    """Everything requested about a family in one report."""
    F, m, r = _uniform_rank(members)
    s = m - r if s is None else s
    rep = DesignReport(len(members), s, mode)
    if weak or strong:
        aw, ww, ast, ws = _scan(members, s, mode, budget, threads, True)
        if weak:
            rep.A_weak, rep.witness_weak = aw, ww
        if strong:
            rep.A_strong, rep.witness_strong = ast, ws
        if weak and strong and not aw <= ast <= min(r, s) * aw:
            raise AssertionError(f"sandwich violated: {aw} <= {ast} <= {min(r, s)} * {aw}")
    if hp:
        rep.hp = hp_check(members, budget=budget)
    return rep


def _sub_json(W: Optional[Subspace]):
    return None if W is None else {"basis": [list(row) for row in W.basis]}


def report_to_json(rep: DesignReport, members: Sequence[Subspace]) -> dict:
    F = members[0].field
    out = {
        "n_members": rep.n_members,
        "mode": str(rep.mode),
        "lower_bound": rep.is_lower_bound,
        "field": F.spec_string(),
        "m": members[0].ambient,
        "s": rep.s,
        "members": [[list(row) for row in H.basis] for H in members],
    }
    if rep.A_weak is not None:
        out["A_weak"] = rep.A_weak
        out["witness_weak"] = _sub_json(rep.witness_weak)
    if rep.A_strong is not None:
        out["A_strong"] = rep.A_strong
        out["witness_strong"] = _sub_json(rep.witness_strong)
    if rep.hp is not None:
        out["hp"] = {
            "is_generator": rep.hp.is_generator,
            "blocker": _sub_json(rep.hp.blocker),
            "equivalence_hypothesis_failed": rep.hp.equivalence_hypothesis_failed,
            "failing_plane": _sub_json(rep.hp.failing_plane),
        }
    return out


def recheck_report(data: dict) -> tuple[bool, list[str]]:
    """Re-verify every certificate in a report; returns ``(ok, problems)``."""
    from .field import parse_field_spec

    F = parse_field_spec(data["field"])
    m = data["m"]
    members = [subspace_from_rows(F, rows, m) for rows in data["members"]]
    problems = []

    def load(w):
        return subspace_from_rows(F, w["basis"], m)

    if "A_weak" in data:
        got = weak_count(members, load(data["witness_weak"]))
        if got != data["A_weak"]:
            problems.append(f"weak witness meets {got} members, report says {data['A_weak']}")
    if "A_strong" in data:
        got = strong_count(members, load(data["witness_strong"]))
        if got != data["A_strong"]:
            problems.append(f"strong witness sums to {got}, report says {data['A_strong']}")
    hp = data.get("hp")
    if hp:
        if hp["blocker"] is not None:
            B = load(hp["blocker"])
            if B.rank != m - members[0].rank or any(intersection_rank(H, B) == 0 for H in members):
                problems.append("blocker certificate does not meet every member")
        if hp.get("failing_plane") is not None:
            P = load(hp["failing_plane"])
            span = subspace_from_rows(F, [], m)
            for H in members:
                span = join(span, intersect(P, H))
            if span.rank == P.rank:
                problems.append("failing plane is in fact spanned")
    return not problems, problems
