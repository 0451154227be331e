import random
from fractions import Fraction

import pytest

from jwcat.series import (LaurentPoly, NoInverseError, TruncatedSeries,
                          WindowError, quantum_two, series_invert, series_mul)


def L(text):
    return LaurentPoly.parse(text)


class TestLaurentPoly:
    def test_poly_identity(self):
        # (1+q)(1-q) = 1 - q^2
        assert L("1 + q") * L("1 - q") == L("1 - q^2")

    def test_inverse_powers(self):
        assert L("q") * L("q^-1") == L("1")

    def test_no_stored_zeros(self):
        p = L("1 + q") - L("q")
        assert p.coeffs == {0: Fraction(1)}

    def test_render_roundtrip_exact(self):
        for text in ["q^-1 + 2 + q^3", "0", "1", "-q", "3/2 q^2 - q^-4", "q"]:
            p = L(text)
            assert LaurentPoly.parse(p.render()) == p

    def test_render_examples(self):
        assert LaurentPoly({-1: 1, 0: 2, 3: 1}).render() == "q^-1 + 2 + q^3"
        assert LaurentPoly({}).render() == "0"

    def test_roundtrip_random(self):
        rng = random.Random(7)
        for _ in range(200):
            coeffs = {rng.randint(-6, 6): Fraction(rng.randint(-9, 9), rng.randint(1, 9))
                      for _ in range(rng.randint(0, 5))}
            p = LaurentPoly(coeffs)
            assert LaurentPoly.parse(p.render()) == p

    def test_ring_axioms_random(self):
        rng = random.Random(11)

        def rand_poly():
            return LaurentPoly({rng.randint(-4, 4): rng.randint(-5, 5)
                                for _ in range(rng.randint(0, 4))})

        for _ in range(100):
            x, y, z = rand_poly(), rand_poly(), rand_poly()
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z
            assert x + y == y + x
            assert x * y == y * x

    def test_substitutions(self):
        p = L("q^2 - q^-1")
        assert p.reverse() == L("q^-2 - q")
        assert p.substitute_minus_qinv() == L("q^-2 + q")


class TestTruncatedSeries:
    def test_geometric_telescoping(self):
        # (q - q^3 + q^5 - ...) * (q + q^-1) = 1, the derived oracle:
        # partial sums of the alternating geometric series
        order = 21
        geom = TruncatedSeries({2 * k + 1: (-1) ** k for k in range(11)}, 1, order + 1)
        prod = geom * quantum_two(order)
        assert prod == TruncatedSeries.one(prod.order)

    def test_invert_quantum_two(self):
        inv = series_invert(quantum_two(15))
        assert inv.min_exp == 1
        assert inv.order == 17  # order 15 gains 2 from the q^-1 valuation
        want = TruncatedSeries({2 * k + 1: (-1) ** k for k in range(9)}, 1, 17)
        assert inv == want
        assert series_mul(inv, quantum_two(15)) == TruncatedSeries.one(1)

    def test_invert_trivial(self):
        one = TruncatedSeries.one(9)
        assert series_invert(one) == one
        q2 = TruncatedSeries({2: 1}, 2, 9)
        assert series_invert(q2) == TruncatedSeries({-2: 1}, -2, 5)

    def test_invert_zero_errors(self):
        with pytest.raises(NoInverseError):
            TruncatedSeries.zero(5).invert()

    def test_invert_mul_is_one_random(self):
        rng = random.Random(23)
        for _ in range(100):
            v = rng.randint(-3, 3)
            coeffs = {v: rng.choice([1, -1, 2, Fraction(1, 2)])}
            for k in range(1, 6):
                coeffs[v + k] = Fraction(rng.randint(-4, 4))
            x = TruncatedSeries(coeffs, v, v + 8)
            y = x.invert()
            prod = x * y
            assert prod == TruncatedSeries.one(prod.order)

    def test_disjoint_windows_error(self):
        x = TruncatedSeries({0: 1}, 0, 3)
        y = TruncatedSeries({5: 1}, 5, 9)
        with pytest.raises(WindowError):
            x + y
        with pytest.raises(WindowError):
            x * y
        with pytest.raises(WindowError):
            x == y

    def test_order_propagation(self):
        x = TruncatedSeries({0: 1, 1: 1}, 0, 5)
        y = TruncatedSeries({2: 1}, 2, 4)
        assert (x + y).order == 4
        # product complete up to min(5+2, 4+0)
        assert (x * y).order == 4
        assert (x * y).min_exp == 2
