#!/usr/bin/env python3
"""The headline comparison: the duality functor intertwines the two projector
constructions, on objects and on the generator maps."""

from jwcat.complexes import (Complex, gaussian_reduce, iso_in_homotopy_category,
                             maps_agree_under_identification)
from jwcat.functors import (CK_on_map, CK_on_object, ModChainMap,
                            P_on_module_map, P_on_object, Setup,
                            koszul_D_on_map, koszul_D_on_object,
                            realize_chain_map)
from jwcat.modules import left_multiplication_hom, projective

setup = Setup.create()
B = setup.B
N = 12


def reduce_windowed(c, window):
    margin = 0 if c.tail is None else 4 * c.tail.period + 4
    if c.tail is not None:
        side_r = c.tail.side == "right"
        c = c.materialize(window[0] - (0 if side_r else margin),
                          window[1] + (margin if side_r else 0))
    return gaussian_reduce(c, keep_window=window)


# objects
for v in ("2", "1"):
    dp = koszul_D_on_object(setup, P_on_object(setup, projective(B, v), depth=N + 8),
                            out_window=(0, N))
    ckd = CK_on_object(setup, koszul_D_on_object(setup, projective(B, v)),
                       out_window=(0, N))
    verdict = iso_in_homotopy_category(dp, ckd, window=(0, N))
    print(f"dual∘projector(P({v})) ≅ projector∘dual(P({v})):", verdict.value)

# maps
P1, P2 = projective(B, "1"), projective(B, "2")
cases = {
    "c": (B.path_element(("a", "b")), P2.shift(2), P2),
    "a": (B.arrow_element("a"), P1.shift(1), P2),
    "b": (B.arrow_element("b"), P2.shift(1), P1),
}
w, cmp_w = (0, N), (0, N - 2)
for name, (z, src, tgt) in cases.items():
    Pz, _, _ = P_on_module_map(setup, left_multiplication_hom(src, tgt, z, name),
                               depth=N + 6)
    DPz, DPsrc, DPtgt = koszul_D_on_map(setup, realize_chain_map(Pz), out_window=w)
    f0 = left_multiplication_hom(src, tgt, z, name)
    fc = ModChainMap(Complex.from_module(src), Complex.from_module(tgt), {0: f0}, name)
    Dz, _, _ = koszul_D_on_map(setup, fc, out_window=w)
    CKDz, CKsrc, CKtgt = CK_on_map(setup, Dz, out_window=w)
    red = [reduce_windowed(c, cmp_w) for c in (DPsrc, DPtgt, CKsrc, CKtgt)]
    lhs = red[1].to_reduced.compose(DPz).compose(red[0].from_reduced)
    rhs = red[3].to_reduced.compose(CKDz).compose(red[2].from_reduced)
    verdict = maps_agree_under_identification(lhs, rhs, cmp_w)
    print(f"on the map {name}: {verdict.value} ({verdict.reason})")
