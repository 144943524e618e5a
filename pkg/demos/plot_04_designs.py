"""
Measuring moment-curve designs
==============================

Build the secant family over GF(5) and the tangent family over GF(7),
then find by exhaustive scan the largest number of members any rank-s
subspace can meet (weak value) and the largest total intersection rank
(strong value).  Dualizing should not change either number.
"""

from subspace_designs import CoefficientScheme, build_design, find_omega, make_field, measure
from subspace_designs.designs import dualize

F5 = make_field(5)
omega = find_omega(F5, 2, 2, "secant")
secant = build_design(CoefficientScheme("secant", 2, 2, F5, int(omega)))

F7 = make_field(7)
tangent = build_design(CoefficientScheme("tangent", 2, 2, F7))

for name, design in (("secant/GF(5)", secant), ("tangent/GF(7)", tangent)):
    rep = measure(design.subspaces)
    dual = measure(dualize(design.subspaces))
    print(f"{name}: {len(design)} members, A_weak={rep.A_weak}, A_strong={rep.A_strong}, "
          f"dual: {dual.A_weak}/{dual.A_strong}")
    print("  a worst subspace:", rep.witness_strong.basis)
