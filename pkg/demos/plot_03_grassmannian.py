"""
Walking the Grassmannian
========================

All rank-r subspaces of F_q^m are visited in a fixed order, which makes
ranges of the enumeration independently scannable.
"""

from subspace_designs import make_field, GrassmannIterator, gaussian_binomial
from subspace_designs.grassmann import grass_degree

F = make_field(3)
it = GrassmannIterator(F, 4, 2)
print(len(it), "lines in PG(3,3); formula gives", gaussian_binomial(4, 2, 3))

# random access and splitting
print(it[0].basis, it[len(it) - 1].basis)
print([len(part) for part in it.split(4)])

print("degree of G(2,4):", grass_degree(2, 2), " degree of G(3,6):", grass_degree(3, 3))
