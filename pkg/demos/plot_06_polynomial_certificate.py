"""
A polynomial certificate for the strong bound
=============================================

For the tangent family the complement of a test subspace W turns into a
square polynomial matrix M(X).  The ranks of the meets with the members
are bounded by root multiplicities of det M(X), whose degree is at most
s(d - s + 1).
"""

import random

from subspace_designs import CoefficientScheme, build_design, make_field
from subspace_designs.designs import crosscheck_strong_poly
from subspace_designs.grassmann import random_subspace

F = make_field(7)
design = build_design(CoefficientScheme("tangent", 2, 2, F))
rng = random.Random(0)

for _ in range(5):
    W = random_subspace(F, 4, 2, rng)
    res = crosscheck_strong_poly(design, W)
    print(f"rank sum {res.rank_sum} <= multiplicities {res.multiplicity_sum} "
          f"<= deg det {res.det_degree} <= {res.degree_bound}")

# aligned with a member, the determinant has a double root there
res = crosscheck_strong_poly(design, design.members[3][0])
print("at t=3:", res.kernel_ranks[3], "kernel rank, multiplicity", res.multiplicities[3])
