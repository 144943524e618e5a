"""
Subspaces, Pluecker coordinates and the meet test
=================================================

A rank-r subspace is stored by its reduced row echelon basis, so two
subspaces are equal exactly when their bases are.  Its Pluecker vector
lists the maximal minors of that basis.
"""

from subspace_designs import make_field, subspace_from_rows, pluecker, dual_pluecker, pairing, intersect
from subspace_designs.exterior import relations_check, relation_for_pair

F = make_field(5)
H = subspace_from_rows(F, [[1, 1, 1, 1], [1, 2, 4, 3]])
print(H.basis)

v = pluecker(H)
print(dict(v.as_dict()))
print("decomposable:", relations_check(v)[0])

# H meets W nontrivially exactly when the dual coordinates of W pair to zero with those of H
W = subspace_from_rows(F, [[1, 1, 1, 1], [0, 0, 1, 0]])
print("pairing:", int(pairing(dual_pluecker(W), v)), " rank of meet:", intersect(H, W).rank)

# a quadratic relation with a chosen leading product
rel = relation_for_pair((0, 3), (1, 2))
for coef, a, b in rel.terms:
    print(f"{coef:+d} * H{a} * H{b}")
print("value on H:", rel.evaluate(v))
