"""
Higgledy-piggledy lines and their blockers
==========================================

Five secant lines of PG(3,5) are higgledy-piggledy: every plane is
spanned by its intersections with them, and no line meets all five.
Three of them are always blocked, and the inductive construction finds
a blocking line directly.
"""

import itertools

from subspace_designs import CoefficientScheme, build_design, find_blocker_greedy, hp_check, lower_bound, make_field
from subspace_designs.designs import is_generator_set, weak_count

F = make_field(5)
members = build_design(CoefficientScheme("secant", 2, 2, F, 2)).subspaces

gen = is_generator_set(members)
print("generator set:", gen.is_generator, "over", gen.checked, "planes")
print("hp verdict:", hp_check(members))
print("fewest possible members:", lower_bound(3, 1, F.q))

for trio in itertools.combinations(members, 3):
    W = find_blocker_greedy(list(trio))
    assert all(weak_count([H], W) for H in trio)
print("every 3 members have a common transversal")

# the floor allows four lines, but these four are blocked by some line
print("4 members hp:", hp_check(members[:4]).is_generator)
