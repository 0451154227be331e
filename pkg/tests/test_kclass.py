import pytest

from jwcat.complexes import ProjComplex, gaussian_reduce
from jwcat.functors import P_on_object, Setup, koszul_D_on_object
from jwcat.kclass import (REVERSED, STANDARD, KClass, apply_jw_reference,
                          class_of_module, duality_on_class, euler_class,
                          jones_wenzl_reference, jw_matrix_square,
                          projective_class, simple_to_projective_basis)
from jwcat.modules import injective2, projective, simple
from jwcat.resolutions import projective_resolution
from jwcat.series import LaurentPoly, TruncatedSeries


@pytest.fixture(scope="module")
def setup():
    return Setup.create()


ORDER = 25


class TestClassOfModule:
    def test_big_projective(self, setup):
        k = class_of_module(projective(setup.B, "2"), ORDER)
        assert k.series["1"] == TruncatedSeries({1: 1}, 1, ORDER)
        assert k.series["2"] == TruncatedSeries({0: 1, 2: 1}, 0, ORDER)

    def test_simple(self, setup):
        k = class_of_module(simple(setup.B, "1"), ORDER)
        assert k.series["1"] == TruncatedSeries({0: 1}, 0, ORDER)
        assert k.series["2"].is_zero()

    def test_shift_multiplies_by_power(self, setup):
        M = projective(setup.B, "1")
        for r in (-2, 3):
            shifted = class_of_module(M.shift(r), ORDER)
            base = class_of_module(M, ORDER)
            q_r = TruncatedSeries.from_laurent(LaurentPoly({r: 1}), ORDER)
            assert shifted == base.scale_series(q_r)


class TestEulerClass:
    def test_projector_image_is_geometric_series(self, setup):
        p = P_on_object(setup, projective(setup.B, "1"), depth=ORDER)
        e = euler_class(p, ORDER)
        # oracle: brute-force alternating partial sums of the model terms
        want = KClass.zero(ORDER)
        k = 0
        while 2 * k + 1 <= ORDER + 3:
            term = class_of_module(projective(setup.B, "2").shift(2 * k + 1), ORDER)
            want = want + (term if k % 2 == 0 else -term)
            k += 1
        assert e == want
        # and in closed form: the inverted quantum integer times the class
        two = TruncatedSeries({1: 1, -1: 1}, -1, ORDER)
        closed = projective_class("2", ORDER).scale_series(two.invert().truncate(ORDER))
        assert e == closed

    def test_zero_complex(self, setup):
        assert euler_class(ProjComplex.zero_complex(setup.B), ORDER).is_zero()

    def test_resolution_has_class_of_module(self, setup):
        res = projective_resolution(simple(setup.B, "1"), 6)
        e = euler_class(res, ORDER)
        assert e == class_of_module(simple(setup.B, "1"), ORDER)

    def test_invariant_under_reduction(self, setup):
        raw = koszul_D_on_object(setup, injective2(setup.B))
        red = gaussian_reduce(raw)
        assert euler_class(raw, ORDER) == euler_class(red.reduced, ORDER)


class TestBasisConversion:
    def test_projective_coordinates_of_projectives(self, setup):
        for v in ("1", "2"):
            k = projective_class(v, ORDER)
            p1, p2 = simple_to_projective_basis(k)
            want1 = TruncatedSeries({0: 1} if v == "1" else {}, 0, ORDER - 2)
            want2 = TruncatedSeries({0: 1} if v == "2" else {}, 0, ORDER - 2)
            assert p1.truncate(ORDER - 2) == want1
            assert p2.truncate(ORDER - 2) == want2


class TestJonesWenzlReference:
    def test_column_values(self):
        jw = jones_wenzl_reference(15)
        assert jw["P(2)"]["P(1)"].is_zero()
        assert jw["P(2)"]["P(2)"] == TruncatedSeries.one(15)
        col = jw["P(1)"]["P(2)"]
        want = TruncatedSeries({2 * k + 1: (-1) ** k for k in range(9)}, 1, 15)
        assert col.truncate(15) == want

    def test_idempotent(self):
        jw = jones_wenzl_reference(21)
        sq = jw_matrix_square(jw)
        for colk in ("P(1)", "P(2)"):
            for rowk in ("P(1)", "P(2)"):
                assert sq[colk][rowk] == jw[colk][rowk]

    def test_action_matches_projector(self, setup):
        jw = jones_wenzl_reference(ORDER)
        for name in ("P(1)", "P(2)", "L(1)", "L(2)"):
            M = setup.standard_module(name)
            got = euler_class(P_on_object(setup, M, depth=ORDER + 2), ORDER)
            want = apply_jw_reference(jw, class_of_module(M, ORDER))
            for v in ("1", "2"):
                assert got.series[v].truncate(ORDER - 6) == \
                    want.series[v].truncate(ORDER - 6), (name, v)


class TestDualityLaw:
    def test_on_bounded_corpus(self, setup):
        for name in ("L(1)", "L(2)", "I(2)", "P(1)", "P(2)"):
            M = setup.standard_module(name)
            got = euler_class(koszul_D_on_object(setup, M), ORDER)
            want = duality_on_class(class_of_module(M, ORDER))
            assert got == want, name


class TestReversedRegime:
    def test_ck_class_lives_in_inverted_completion(self, setup):
        from jwcat.functors import CK_on_object
        ck = CK_on_object(setup, ProjComplex.from_summand(setup.B, "1"),
                          out_window=(0, 12))
        e = euler_class(ck, ORDER)
        assert e.regime == REVERSED
        # hand value: u^2 - u^4 + ... on the vertex-1 simple, zero on the other
        want = TruncatedSeries({2 * k: (-1) ** (k + 1) for k in range(1, 10)}, 2, 18)
        assert e.series["1"].truncate(16) == want.truncate(16)
        assert e.series["2"].truncate(16).is_zero()

    def test_regime_mixing_refused(self, setup):
        from jwcat.complexes import RegimeError
        a = KClass.zero(10, STANDARD)
        b = KClass({v: TruncatedSeries({1: 1}, 1, 10) for v in ("1", "2")}, REVERSED)
        with pytest.raises(RegimeError):
            a + b
