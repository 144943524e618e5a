"""
Arithmetic in GF(p^h)
=====================

Elements are canonical integers whose base-p digits are polynomial
coefficients, constant term first.
"""

from subspace_designs import make_field, parse_field_spec
from subspace_designs.field import element_order

# GF(4) with its default modulus X^2 + X + 1
F = make_field(2, 2)
print(F, F.modulus)

# the multiplication table
for a in range(F.q):
    print([F.mul(a, b) for b in range(F.q)])

# wrapped elements support the usual operators
x = F(2)
print("x^3 =", int(x**3), " 1/x =", int(x.inv()))

# a different modulus gives a different (isomorphic) field object
G = parse_field_spec("2^3:modulus=1,1,0,1")
print(G, "generator orders:", sorted({element_order(G(a)) for a in range(1, G.q)}))
