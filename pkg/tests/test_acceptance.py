"""Acceptance criteria, one test per criterion, run at the stated window
N = 16 with exact arithmetic and zero tolerance throughout. Each test prints
one pass/fail line (visible with pytest -s or on failure)."""

import time

import pytest

from jwcat.complexes import (Complex, ProjChainMap, ProjComplex, Summand,
                             gaussian_reduce, homology,
                             iso_in_homotopy_category,
                             maps_agree_under_identification,
                             match_up_to_diagonal_signs, realize)
from jwcat.functors import (CK_on_map, CK_on_object, ModChainMap,
                            P_on_module_map, P_on_object, Setup,
                            koszul_D_on_map, koszul_D_on_object,
                            realize_chain_map, two_term_dual_model)
from jwcat.kclass import (euler_class, jones_wenzl_reference,
                          jw_matrix_square, projective_class)
from jwcat.modules import (find_module_iso, injective2,
                           left_multiplication_hom, projective, simple)
from jwcat.quiver import koszul_dual
from jwcat.resolutions import projective_resolution
from jwcat.series import LaurentPoly, TruncatedSeries
from jwcat.verify import VerificationConfig, run_suite, _Runner

N = 16
ORDER = 2 * N + 1


@pytest.fixture(scope="module")
def setup():
    return Setup.create()


@pytest.fixture(scope="module")
def runner():
    return _Runner(VerificationConfig(window=N))


def _report(criterion: str, ok: bool):
    print(f"ACCEPTANCE {criterion}: {'PASS' if ok else 'FAIL'}")
    assert ok, criterion


def test_criterion_1_theorem_reproduction(runner):
    """Both composite functors agree on both projectives and on the five
    generator maps, each check within the stated runtime budget."""
    t0 = time.time()
    ok = True
    for vertex in ("1", "2"):
        t = time.time()
        dp = runner.dp_side(vertex)
        ckd = runner.ckd_side(vertex)
        v = iso_in_homotopy_category(dp, ckd, window=(0, N))
        ok &= v.value == "true"
        assert time.time() - t < 5.0, f"object check for P({vertex}) too slow"
    setup = runner.setup
    w, cmp_w = (0, N), (0, N - 2)
    for zname, (z, src, tgt) in runner.generators().items():
        t = time.time()
        Pz, _, _ = P_on_module_map(
            setup, left_multiplication_hom(src, tgt, z, zname), depth=N + 6)
        DPz, DPsrc, DPtgt = koszul_D_on_map(setup, realize_chain_map(Pz),
                                            out_window=w)
        f0 = left_multiplication_hom(src, tgt, z, zname)
        fc = ModChainMap(Complex.from_module(src), Complex.from_module(tgt),
                         {0: f0}, zname)
        Dz, _, _ = koszul_D_on_map(setup, fc, out_window=w)
        CKDz, CKsrc, CKtgt = CK_on_map(setup, Dz, out_window=w)
        red = [runner.reduce(c, window=cmp_w) for c in (DPsrc, DPtgt, CKsrc, CKtgt)]
        lhs = red[1].to_reduced.compose(DPz).compose(red[0].from_reduced)
        rhs = red[3].to_reduced.compose(CKDz).compose(red[2].from_reduced)
        v = maps_agree_under_identification(lhs, rhs, cmp_w)
        ok &= v.value == "true"
        assert time.time() - t < 5.0, f"map check for {zname} too slow"
    _report("1 (theorem on objects and maps, N=16, exact)", ok)


def test_criterion_2_explicit_complex_fixtures(runner):
    """The projector value matches the 2-periodic model termwise; the
    composite matches the explicit middle-column matrices up to a recorded
    diagonal sign change; the split maps verify the decomposition."""
    setup = runner.setup
    B = setup.B
    ok = True
    pP1 = P_on_object(setup, projective(B, "1"), depth=N + 4)
    c_el = B.path_element(("a", "b"))
    for i in range(-N, 1):
        ok &= pP1.term(i) == (Summand("2", -2 * i + 1),)
        if i < 0:
            ok &= pP1.diff(i).entries[0][0] == c_el
    mid, left, right, J, Km, L, M = runner._split_fixtures(N)
    dp1 = runner.dp_side("1")
    shifted_mid = mid.shift(-3, -3)
    cmp_w = (1, N)
    ok2, signs = match_up_to_diagonal_signs(dp1.clip(*cmp_w),
                                            shifted_mid.clip(*cmp_w), cmp_w)
    ok &= ok2
    win = (-2, N - 1)
    idL = ProjChainMap.identity(left)
    idR = ProjChainMap.identity(right)
    idM = ProjChainMap.identity(mid)
    for i in range(win[0], win[1] + 1):
        ok &= (L.compose(J)).component(i) == idL.component(i)
        ok &= (Km.compose(M)).component(i) == idR.component(i)
        ok &= (Km.compose(J)).component(i).is_zero()
        ok &= (L.compose(M)).component(i).is_zero()
        ok &= (J.compose(L) + M.compose(Km)).component(i) == idM.component(i)
    _report("2 (explicit matrices and splitting, exact equality)", ok)


def test_criterion_3_ck_fixtures(runner):
    """The topological projector kills the big projective, matches the
    displayed complex on the other, and its consecutive compositions vanish."""
    setup = runner.setup
    B = setup.B
    ok = True
    ck2 = CK_on_object(setup, ProjComplex.from_summand(B, "2"), out_window=(0, N))
    ok &= runner.reduce(ck2, window=(0, N - 4)).reduced.is_zero()
    ck1 = CK_on_object(setup, ProjComplex.from_summand(B, "1"), out_window=(0, N))
    c_el, a_el = B.path_element(("a", "b")), B.arrow_element("a")
    ok &= ck1.term(0) == (Summand("1", 0),)
    ok &= ck1.diff(0).entries == [[a_el]]
    for i in range(1, N - 1):
        ok &= ck1.term(i) == (Summand("2", -2 * i + 1),)
        sign = -1 if i % 2 == 1 else 1
        ok &= ck1.diff(i).entries == [[c_el.scale(sign)]]
    from jwcat.quiver import bimodule_maps_alpha_beta_gamma, build_theta
    theta = build_theta(B)
    alpha, beta, gamma = bimodule_maps_alpha_beta_gamma(B, theta)
    ok &= beta.compose(alpha).is_zero()
    ok &= gamma.compose(beta).is_zero()
    ok &= beta.compose(gamma).is_zero()
    _report("3 (topological projector fixtures, exact)", ok)


def test_criterion_4_duality_fixtures(runner):
    """The four module-level duality images, the two-term model by reduction
    of the raw output, and both shift laws for all standard modules and
    shifts up to three."""
    setup = runner.setup
    B = setup.B
    ok = True
    DL1 = koszul_D_on_object(setup, simple(B, "1"))
    ok &= dict(DL1.terms) == {0: (Summand("2", 0),)} and not DL1.diffs
    DL2 = koszul_D_on_object(setup, simple(B, "2"))
    ok &= dict(DL2.terms) == {0: (Summand("1", 0),)} and not DL2.diffs
    DI2 = koszul_D_on_object(setup, injective2(B))
    redI2 = gaussian_reduce(DI2).reduced
    ok &= iso_in_homotopy_category(
        redI2, projective_resolution(simple(B, "1"), 6), window=(-3, 1)).value == "true"
    ok &= find_module_iso(projective(B, "2"), injective2(B).shift(2)) is not None
    raw = koszul_D_on_object(setup, projective(B, "1"))
    red = gaussian_reduce(raw).reduced
    model = two_term_dual_model(setup)
    ok &= red.terms == model.terms and red.diffs == model.diffs
    for name in ("P(1)", "P(2)", "L(1)", "L(2)", "I(2)"):
        Mod = setup.standard_module(name)
        DM = koszul_D_on_object(setup, Mod)
        for r in range(-3, 4):
            lhs = koszul_D_on_object(setup, Mod.shift(r))
            rhs = DM.shift(-r, -r)
            lo = min(lhs.window()[0], rhs.window()[0]) - 1
            hi = max(lhs.window()[1], rhs.window()[1]) + 1
            ok &= iso_in_homotopy_category(lhs, rhs, window=(lo, hi)).value == "true"
            lhs2 = koszul_D_on_object(setup, Complex.from_module(Mod, degree=-r))
            rhs2 = DM.shift(0, r)
            lo = min(lhs2.window()[0], rhs2.window()[0]) - 1
            hi = max(lhs2.window()[1], rhs2.window()[1]) + 1
            ok &= iso_in_homotopy_category(lhs2, rhs2, window=(lo, hi)).value == "true"
    _report("4 (duality fixtures and shift laws, exact)", ok)


def test_criterion_5_decategorification(runner):
    """Series identities through order 2N+1 = 33: the projector class is the
    expansion of the inverted quantum integer, the reference matrix is
    idempotent, classes are invariant under reduction over the corpus."""
    setup = runner.setup
    B = setup.B
    ok = True
    pP1 = P_on_object(setup, projective(B, "1"), depth=ORDER + 2)
    e = euler_class(pP1, ORDER)
    two = TruncatedSeries.from_laurent(LaurentPoly({1: 1, -1: 1}), ORDER)
    ref = projective_class("2", ORDER).scale_series(two.invert().truncate(ORDER))
    ok &= e == ref
    jw = jones_wenzl_reference(ORDER)
    sq = jw_matrix_square(jw)
    for colk in ("P(1)", "P(2)"):
        for rowk in ("P(1)", "P(2)"):
            ok &= sq[colk][rowk] == jw[colk][rowk]
    corpus = [pP1, runner.dp_side("1"), runner.dp_side("2"),
              runner.ckd_side("1"), runner.ckd_side("2"),
              koszul_D_on_object(setup, injective2(B))]
    from jwcat.verify import _classes_agree
    for c in corpus:
        red = runner.reduce(c, window=(min(0, c.window()[0]), N))
        ok &= _classes_agree(euler_class(red.original, ORDER),
                             euler_class(red.reduced, ORDER), N - 6)
    _report("5 (decategorification through order 33, exact coefficients)", ok)


def test_criterion_6_property_suites(runner):
    """d∘d = 0 on every constructed complex; reduction preserves homology on
    window degrees; post-reduction minimality; exhaustive associativity on
    both algebras; the structure map is an algebra isomorphism."""
    setup = runner.setup
    B = setup.B
    ok = True
    # d∘d = 0 is asserted at construction; re-validate explicitly on corpus
    corpus = [runner.dp_side("1"), runner.ckd_side("1"),
              P_on_object(setup, projective(B, "1"), depth=10),
              koszul_D_on_object(setup, injective2(B))]
    for c in corpus:
        lo, hi = c.window()
        for i in range(lo, hi):
            ok &= (c.diff(i + 1) * c.diff(i)).is_zero()
    # reduction preserves homology
    for Mname in ("I(2)", "P(2)"):
        raw = koszul_D_on_object(setup, setup.standard_module(Mname))
        red = gaussian_reduce(raw)
        R1, R2 = realize(raw), realize(red.reduced)
        lo, hi = raw.window()
        for i in range(lo - 1, hi + 2):
            ok &= homology(R1, i) == homology(R2, i)
    # minimality after reduction
    for c in corpus:
        red = runner.reduce(c, window=(min(0, c.window()[0]), N - 4))
        for d in red.reduced.diffs.values():
            ok &= d.all_entries_in_radical()
    # associativity, exhaustively, on both algebras
    from fractions import Fraction
    for alg in (B, koszul_dual(B)[0]):
        elems = [alg.element({p: Fraction(1)}) for p in alg.basis]
        for x in elems:
            for y in elems:
                for z in elems:
                    ok &= (x * y) * z == x * (y * z)
    # the structure map is an algebra isomorphism
    dual, corr = koszul_dual(B)
    phi = corr["phi"]
    elems = [B.element({p: Fraction(1)}) for p in B.basis]
    images = set()
    for x in elems:
        fx = phi(x)
        ok &= not fx.is_zero()
        images.add(next(iter(fx.terms)))
        for y in elems:
            ok &= phi(x * y) == phi(x) * phi(y)
    ok &= len(images) == len(dual.basis)
    _report("6 (property suites, 100% required)", ok)


def test_full_suite_passes_at_window_16():
    """The packaged verification suite itself: all checks pass at N = 16."""
    report = run_suite(VerificationConfig(window=N))
    counts = report.verdict_counts()
    print(f"ACCEPTANCE suite: {counts}")
    assert counts["fail"] == 0 and counts["inconclusive"] == 0


def test_small_window_degrades_to_inconclusive():
    """A smaller window may lose certainty but never gains contradictions."""
    report = run_suite(VerificationConfig(window=4))
    counts = report.verdict_counts()
    print(f"ACCEPTANCE degradation: {counts}")
    assert counts["fail"] == 0
