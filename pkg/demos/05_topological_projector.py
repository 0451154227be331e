#!/usr/bin/env python3
"""The semi-infinite bimodule complex, tensored against complexes of
projectives: contractible on the big projective, the signed 2-periodic tower
on the other."""

from jwcat.complexes import ProjComplex, gaussian_reduce
from jwcat.functors import CK_on_object, Setup, ck_bimodule_complex
from jwcat.kclass import euler_class

setup = Setup.create()
B = setup.B

ck = ck_bimodule_complex(setup, depth=6)
print("bimodule complex: regular bimodule, then", len(ck.terms) - 1,
      "shifted translation bimodules")
print("consecutive composites vanish:", ck.check_composites_vanish())
print()

ck2 = CK_on_object(setup, ProjComplex.from_summand(B, "2"), out_window=(0, 12))
print("on P(2), raw:", ck2.pretty()[:90], "...")
red = gaussian_reduce(ck2.materialize(0, 18), keep_window=(0, 10))
print("on P(2), reduced:", red.reduced.pretty(), "(contractible)")
print()

ck1 = CK_on_object(setup, ProjComplex.from_summand(B, "1"), out_window=(0, 12))
print("on P(1):", ck1.pretty())
print("differentials:", [ck1.diff(i).entries[0][0].word() for i in range(4)],
      "... signs alternate with period two")
print("tail:", ck1.tail)
print()
print("class in the inverted-variable completion:")
print("  ", euler_class(ck1, order=17).render())
