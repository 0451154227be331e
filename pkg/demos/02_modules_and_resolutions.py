#!/usr/bin/env python3
"""Standard modules, hom spaces computed as exact linear systems, and minimal
projective resolutions (finite over the path algebra, 2-periodic over the
dual numbers)."""

from jwcat.modules import (hom_space, injective2, projective, simple,
                           tensor_with_bimodule, find_module_iso, direct_sum)
from jwcat.quiver import build_B, build_C, build_theta
from jwcat.resolutions import projective_resolution

B, C = build_B(), build_C()
P1, P2 = projective(B, "1"), projective(B, "2")
L1, L2 = simple(B, "1"), simple(B, "2")

print("P(1):", P1, "   P(2):", P2, "   I(2):", injective2(B))
print()

print("hom spaces (degrees of a homogeneous basis):")
for src, tgt, label in [(P2, P2, "End(P(2))"), (P1, P2, "Hom(P(1),P(2))"),
                        (P2, P1, "Hom(P(2),P(1))"), (L1, L2, "Hom(L(1),L(2))")]:
    degs = sorted(h.degree for h in hom_space(src, tgt))
    print(f"  {label}: {degs or 'zero'}")

# the translation functor on projectives
theta = build_theta(B)
tP1 = tensor_with_bimodule(P1, theta)
tP2 = tensor_with_bimodule(P2, theta)
print()
print("theta⊗P(1) ≅ P(2):", find_module_iso(tP1, P2) is not None)
print("theta⊗P(2) ≅ P(2)<-1> ⊕ P(2)<1>:",
      find_module_iso(tP2, direct_sum([P2.shift(-1), P2.shift(1)])) is not None)

# minimal resolutions: the simple at vertex 1 needs two steps, the simple at
# vertex 2 only one (global dimension two), and over the dual numbers the
# resolution of the trivial module is 2-periodic forever
print()
print("resolution of L(1):", projective_resolution(L1, 6).pretty())
print("resolution of L(2):", projective_resolution(L2, 6).pretty())
resC = projective_resolution(simple(C, "*"), 8)
print("resolution of the trivial module over the dual numbers:")
print("  ", resC.pretty())
print("   tail descriptor:", resC.tail)
