#!/usr/bin/env python3
"""Build the two-vertex path algebra, its quadratic dual, and the translation
bimodule, and poke at their multiplication tables."""

from jwcat.quiver import (bimodule_maps_alpha_beta_gamma, build_B, build_theta,
                          koszul_dual)

B = build_B()
print("algebra B:", B)
print("graded dimensions:", B.graded_dimensions(3))
print("basis:", ", ".join(p.word() for p in B.basis))

a, b = B.arrow_element("a"), B.arrow_element("b")
e1, e2 = B.idempotent("1"), B.idempotent("2")
print()
print("a·b =", (a * b).word(), "   (the degree-2 loop)")
print("b·a =", (b * a).word(), "   (the defining relation)")
print("sandwiches: e(2)·a·e(1) =", (e2 * a * e1).word(),
      "  e(1)·b·e(2) =", (e1 * b * e2).word())

# the quadratic dual and the structure isomorphism
dual, corr = koszul_dual(B)
phi = corr["phi"]
print()
print("dual algebra:", dual, "with relations", ["".join(r) for r in dual.relations])
print("phi(a) =", phi(a).word(), "  phi(b) =", phi(b).word())
print("phi(ab) =", phi(a * b).word(), "  (survives: phi is an isomorphism)")
print("phi(b)·phi(a) =", (phi(b) * phi(a)).word(), " (the image of ba dies)")

# the translation bimodule: 3 x 3 tensor basis, lowest vector in degree -1
theta = build_theta(B)
print()
print("translation bimodule: dim", theta.dim(), "degrees", theta.degrees())
alpha, beta, gamma = bimodule_maps_alpha_beta_gamma(B, theta)
print("structure maps alpha, beta, gamma with degrees",
      (alpha.degree, beta.degree, gamma.degree))
print("beta∘alpha = 0:", beta.compose(alpha).is_zero())
print("gamma∘beta = 0:", gamma.compose(beta).is_zero())
print("beta∘gamma = 0:", beta.compose(gamma).is_zero())
