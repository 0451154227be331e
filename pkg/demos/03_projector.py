#!/usr/bin/env python3
"""The derived projector: identity on the big projective, the 2-periodic
free-resolution tower on the other, idempotent up to homotopy, and its
decategorified shadow 1/[2]."""

from jwcat.complexes import iso_in_homotopy_category
from jwcat.functors import P_on_object, Setup
from jwcat.kclass import euler_class
from jwcat.modules import projective

setup = Setup.create()
B = setup.B

pP2 = P_on_object(setup, projective(B, "2"), depth=8)
print("projector on P(2):", pP2.pretty())

pP1 = P_on_object(setup, projective(B, "1"), depth=8)
print("projector on P(1):", pP1.pretty())
print("  all differentials are the degree-2 loop:",
      all(d.entries[0][0].word() == "ab" for d in pP1.diffs.values()))
print("  tail:", pP1.tail)

# idempotency: applying the projector to its own image changes nothing
ppP1 = P_on_object(setup, pP1, depth=8)
verdict = iso_in_homotopy_category(ppP1, pP1, window=(-6, 0))
print("projector is idempotent on the window:", verdict.value)

# the graded Euler characteristic is the completed inverse quantum integer
e = euler_class(pP1, order=17)
print()
print("class of the projector value on P(1):")
print("  ", e.render())
print("(the expansion of q/(1+q^2) times the class of P(2))")
