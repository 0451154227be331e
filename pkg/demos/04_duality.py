#!/usr/bin/env python3
"""The duality functor from the bigraded construction: module values, the
two-term model for the first projective, and the diagonal shift law."""

from jwcat.complexes import gaussian_reduce, iso_in_homotopy_category
from jwcat.functors import D_of_P1, Setup, koszul_D_on_object
from jwcat.modules import injective2, projective, simple

setup = Setup.create()
B = setup.B

for name, M in [("L(1)", simple(B, "1")), ("L(2)", simple(B, "2")),
                ("I(2)", injective2(B)), ("P(2)", projective(B, "2"))]:
    raw = koszul_D_on_object(setup, M)
    red = gaussian_reduce(raw).reduced
    print(f"dual of {name}: raw {raw.pretty()}")
    if red.terms != raw.terms:
        print(f"           reduced {red.pretty()}")

rep = D_of_P1(setup)
print()
print("dual of P(1):", rep.reduced.pretty(),
      " differential:", rep.reduced.diffs[0].entries[0][0].word())

# the internal shift becomes a diagonal shift on the other side
M = simple(B, "1")
DM = koszul_D_on_object(setup, M)
for r in (1, -2, 3):
    lhs = koszul_D_on_object(setup, M.shift(r))
    rhs = DM.shift(-r, -r)
    v = iso_in_homotopy_category(lhs, rhs, window=(-4, 4))
    print(f"dual(M<{r}>) ≅ dual(M)<{-r}>[{-r}]:", v.value)
