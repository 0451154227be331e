from fractions import Fraction

import pytest

from jwcat.quiver import (ConstructionError, PathAlgebra, Path, Quiver,
                          algebra_as_bimodule, bimodule_maps_alpha_beta_gamma,
                          build_B, build_C, build_path_algebra, build_theta,
                          koszul_dual, zigzag_quiver)


@pytest.fixture(scope="module")
def B():
    return build_B()


@pytest.fixture(scope="module")
def theta(B):
    return build_theta(B)


class TestPathAlgebraB:
    def test_graded_dimensions(self, B):
        assert B.graded_dimensions(3) == [2, 2, 1, 0]

    def test_degree_pieces(self, B):
        assert {p.word() for p in B.basis_by_degree[0]} == {"e(1)", "e(2)"}
        assert {p.word() for p in B.basis_by_degree[1]} == {"a", "b"}
        assert {p.word() for p in B.basis_by_degree[2]} == {"ab"}

    def test_one_vertex_no_arrows(self):
        q = Quiver(("v",), ())
        alg = build_path_algebra(q, [], d_max=3)
        assert alg.graded_dimensions(2) == [1, 0, 0]

    def test_bad_relation_rejected(self):
        # aa is not composable in the two-vertex quiver
        with pytest.raises(ConstructionError):
            build_path_algebra(zigzag_quiver(), [("a", "a")])

    def test_sandwiches(self, B):
        a, b = B.arrow_element("a"), B.arrow_element("b")
        e1, e2 = B.idempotent("1"), B.idempotent("2")
        assert e2 * a * e1 == a
        assert e1 * b * e2 == b
        c = a * b
        assert e2 * c * e2 == c

    def test_multiplication_table(self, B):
        a, b = B.arrow_element("a"), B.arrow_element("b")
        e1 = B.idempotent("1")
        assert (a * b).word() == "ab"
        assert (b * a).is_zero()
        assert e1 * e1 == e1
        assert (a * b * a).is_zero()
        assert (b * a * b).is_zero()

    def test_associativity_exhaustive(self, B):
        elems = [B.element({p: Fraction(1)}) for p in B.basis]
        for x in elems:
            for y in elems:
                for z in elems:
                    assert (x * y) * z == x * (y * z)

    def test_radical_nilpotent(self, B):
        rad = [B.element({p: Fraction(1)}) for p in B.radical_basis()]
        for x in rad:
            for y in rad:
                for z in rad:
                    assert (x * y * z).is_zero()

    def test_json_roundtrip(self, B):
        import json
        blob = json.dumps(B.to_json(), sort_keys=True)
        B2 = PathAlgebra.from_json(json.loads(blob))
        assert json.dumps(B2.to_json(), sort_keys=True) == blob


class TestAlgebraC:
    def test_c_structure(self):
        C = build_C()
        assert C.graded_dimensions(3) == [1, 0, 1, 0]
        x = C.arrow_element("x")
        assert (x * x).is_zero()
        assert x.degree() == 2


class TestKoszulDual:
    def test_dual_dimensions(self, B):
        dual, _ = koszul_dual(B)
        assert dual.graded_dimensions(3) == [2, 2, 1, 0]

    def test_dual_relation_kills_image_of_relation(self, B):
        dual, corr = koszul_dual(B)
        phi = corr["phi"]
        a, b = B.arrow_element("a"), B.arrow_element("b")
        assert (phi(b) * phi(a)).is_zero()          # image of the dead word dies
        assert not (phi(a) * phi(b)).is_zero()      # image of ab survives

    def test_phi_table(self, B):
        dual, corr = koszul_dual(B)
        phi = corr["phi"]
        assert phi(B.arrow_element("a")) == dual.arrow_element("a*")
        assert phi(B.arrow_element("b")) == dual.arrow_element("b*")
        assert phi(B.idempotent("1")) == dual.idempotent("2")
        assert phi(B.idempotent("2")) == dual.idempotent("1")
        assert corr["arrow_map"] == {"a": "a*", "b": "b*"}

    def test_phi_is_algebra_isomorphism(self, B):
        dual, corr = koszul_dual(B)
        phi = corr["phi"]
        basis_elems = [B.element({p: Fraction(1)}) for p in B.basis]
        images = set()
        for x in basis_elems:
            for y in basis_elems:
                assert phi(x * y) == phi(x) * phi(y)
        for x in basis_elems:
            fx = phi(x)
            assert not fx.is_zero()
            deg = x.degree()
            assert fx.degree() == deg
            images.add(next(iter(fx.terms)))
        assert len(images) == len(dual.basis)  # bijective on bases

    def test_dual_associativity_exhaustive(self, B):
        dual, _ = koszul_dual(B)
        elems = [dual.element({p: Fraction(1)}) for p in dual.basis]
        for x in elems:
            for y in elems:
                for z in elems:
                    assert (x * y) * z == x * (y * z)

    def test_unsupported_shape(self):
        C = build_C()
        with pytest.raises(ConstructionError):
            koszul_dual(C)


class TestTheta:
    def test_total_dimension(self, theta):
        # (paths into 2) x (paths out of 2) = {e(2),b,ab} x {e(2),a,ab}
        assert theta.dim() == 9

    def test_lowest_degree(self, theta):
        assert theta.lowest_degree() == -1
        lows = [v for v in theta.basis if v.degree == -1]
        assert len(lows) == 1 and lows[0].label == "e(2)⊗e(2)"

    def test_degrees(self, theta):
        assert theta.degrees() == {-1: 1, 0: 2, 1: 3, 2: 2, 3: 1}

    def test_outer_actions(self, B, theta):
        idx = theta.pair_index
        n = theta.dim()

        def unit(i):
            v = [Fraction(0)] * n
            v[i] = Fraction(1)
            return v

        e2e2 = next(i for (p, q), i in idx.items()
                    if p.word() == "e(2)" and q.word() == "e(2)")
        b_e2 = next(i for (p, q), i in idx.items()
                    if p.word() == "b" and q.word() == "e(2)")
        img = theta.left_act(B.arrow_element("b"), unit(e2e2))
        assert img == unit(b_e2)
        # per the multiplication table, right-multiplication by b kills the
        # vectors whose right factor is e(2) or ab, and sends b⊗a to b⊗ab
        b_a = next(i for (p, q), i in idx.items()
                   if p.word() == "b" and q.word() == "a")
        b_ab = next(i for (p, q), i in idx.items()
                    if p.word() == "b" and q.word() == "ab")
        img = theta.right_act(unit(b_a), B.arrow_element("b"))
        assert img == unit(b_ab)
        img = theta.right_act(unit(b_e2), B.arrow_element("b"))
        assert all(c == 0 for c in img)
        b_abab = next(i for (p, q), i in idx.items()
                      if p.word() == "b" and q.word() == "ab")
        img = theta.right_act(unit(b_abab), B.arrow_element("b"))
        assert all(c == 0 for c in img)

    def test_actions_commute_exhaustive(self, B, theta):
        gens = [a.name for a in B.quiver.arrows] + ["e(1)", "e(2)"]
        for g in gens:
            for h in gens:
                assert (theta.left_action[g] * theta.right_action[h]
                        == theta.right_action[h] * theta.left_action[g])


@pytest.fixture(scope="module")
def maps(B, theta):
    return bimodule_maps_alpha_beta_gamma(B, theta)


class TestAlphaBetaGamma:

    def test_alpha_on_e1(self, B, theta, maps):
        alpha, _, _ = maps
        reg = algebra_as_bimodule(B)
        v = [Fraction(0)] * reg.dim()
        v[reg.path_index[Path((), "1")]] = Fraction(1)
        img = alpha(v)
        ba = next(i for (p, q), i in theta.pair_index.items()
                  if p.word() == "b" and q.word() == "a")
        want = [Fraction(0)] * theta.dim()
        want[ba] = Fraction(1)
        assert img == want

    def test_beta_on_generator(self, B, theta, maps):
        _, beta, _ = maps
        idx = theta.pair_index
        e2e2 = next(i for (p, q), i in idx.items()
                    if p.word() == "e(2)" and q.word() == "e(2)")
        c_e2 = next(i for (p, q), i in idx.items()
                    if p.word() == "ab" and q.word() == "e(2)")
        e2_c = next(i for (p, q), i in idx.items()
                    if p.word() == "e(2)" and q.word() == "ab")
        v = [Fraction(0)] * theta.dim()
        v[e2e2] = Fraction(1)
        img = beta(v)
        want = [Fraction(0)] * theta.dim()
        want[c_e2], want[e2_c] = Fraction(1), Fraction(-1)
        assert img == want

    def test_degrees(self, maps):
        alpha, beta, gamma = maps
        assert (alpha.degree, beta.degree, gamma.degree) == (1, 2, 2)

    def test_consecutive_compositions_vanish(self, maps):
        alpha, beta, gamma = maps
        assert beta.compose(alpha).is_zero()
        assert gamma.compose(beta).is_zero()
        assert beta.compose(gamma).is_zero()
