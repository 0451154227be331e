"""Grothendieck classes: graded Euler characteristics as truncated series,
and the reference idempotent matrix they must reproduce.

A class is one series per vertex in the basis of the two simples. Complexes
bounded below in the grading (the projector side) produce honest elements of
the completion; complexes from the topological side have exponents unbounded
below, so their classes are stored with q inverted and flagged ``reversed``
(comparisons undo the flag, arithmetic refuses to mix regimes).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .complexes import (LEFT_TAIL, RIGHT_TAIL, Complex, ProjComplex, Summand,
                        RegimeError)
from .modules import GradedModule
from .series import LaurentPoly, TruncatedSeries

VERTICES = ("1", "2")
STANDARD = "standard"
REVERSED = "reversed"


@dataclass
class KClass:
    """Coefficients of the two simple classes, as truncated series."""
    series: dict[str, TruncatedSeries]
    regime: str = STANDARD

    def coeff(self, v: str) -> TruncatedSeries:
        return self.series[v]

    def __add__(self, other: KClass) -> KClass:
        self._check(other)
        return KClass({v: self.series[v] + other.series[v] for v in VERTICES},
                      self.regime)

    def __sub__(self, other: KClass) -> KClass:
        self._check(other)
        return KClass({v: self.series[v] - other.series[v] for v in VERTICES},
                      self.regime)

    def __neg__(self) -> KClass:
        return KClass({v: -s for v, s in self.series.items()}, self.regime)

    def scale_series(self, t: TruncatedSeries) -> KClass:
        return KClass({v: s * t for v, s in self.series.items()}, self.regime)

    def scale(self, c) -> KClass:
        return KClass({v: s.scale(c) for v, s in self.series.items()}, self.regime)

    def is_zero(self) -> bool:
        return all(s.is_zero() for s in self.series.values())

    def _check(self, other: KClass):
        if self.regime != other.regime:
            raise RegimeError("cannot combine classes from opposite completions")

    def __eq__(self, other):
        if not isinstance(other, KClass):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        if self.regime != other.regime:
            return False
        return all(self.series[v] == other.series[v] for v in VERTICES)

    def render(self) -> str:
        parts = [f"[L({v})]·({self.series[v].render()})" for v in VERTICES
                 if not self.series[v].is_zero()]
        body = " + ".join(parts) if parts else "0"
        if self.regime == REVERSED:
            body += "   (in the q→q⁻¹ completion)"
        return body

    @classmethod
    def zero(cls, order: int, regime: str = STANDARD) -> KClass:
        return cls({v: TruncatedSeries.zero(order) for v in VERTICES}, regime)


def class_of_module(M: GradedModule, order: int) -> KClass:
    """[M] = Σ_j dim(M_j at vertex v)·q^j·[L(v)] (exact: a Laurent polynomial)."""
    polys = {v: {} for v in VERTICES}
    for (j, v), d in M.graded_dims_by_vertex().items():
        polys[v][j] = Fraction(d)
    return KClass({v: TruncatedSeries.from_laurent(LaurentPoly(polys[v]), order)
                   for v in VERTICES})


def class_of_summand(s: Summand, order: int, reversed_q: bool = False) -> KClass:
    """Class of P(v)<r>: in reversed mode exponents are negated."""
    if s.vertex == "1":
        poly = {"1": {0: 1}, "2": {1: 1}}
    else:
        poly = {"1": {1: 1}, "2": {0: 1, 2: 1}}
    sgn = -1 if reversed_q else 1
    out = {}
    for v in VERTICES:
        coeffs = {sgn * (e + s.shift): Fraction(c) for e, c in poly[v].items()}
        out[v] = TruncatedSeries.from_laurent(LaurentPoly(coeffs), order)
    return KClass(out, REVERSED if reversed_q else STANDARD)


def _term_class(term: tuple[Summand, ...], order: int, reversed_q: bool) -> KClass:
    out = KClass.zero(order, REVERSED if reversed_q else STANDARD)
    for s in term:
        out = out + class_of_summand(s, order, reversed_q)
    return out


def euler_class(x, order: int) -> KClass:
    """Alternating sum of term classes; periodic tails are summed exactly as
    geometric series in the appropriate completion."""
    if isinstance(x, GradedModule):
        return class_of_module(x, order)
    if isinstance(x, Complex):
        if x.tail is not None:
            raise RegimeError("module-level tails are not summed; use the formal complex")
        out = KClass.zero(order)
        for i, m in x.terms.items():
            c = class_of_module(m, order)
            out = out + (c if i % 2 == 0 else -c)
        return out
    if not isinstance(x, ProjComplex):
        raise TypeError(f"cannot decategorify {x!r}")
    if x.is_zero():
        return KClass.zero(order)
    reversed_q = x.tail is not None and x.tail.side == RIGHT_TAIL
    regime = REVERSED if reversed_q else STANDARD
    out = KClass.zero(order, regime)
    lo, hi = x.window()
    for i in range(lo, hi + 1):
        c = _term_class(x.term(i), order, reversed_q)
        out = out + (c if i % 2 == 0 else -c)
    t = x.tail
    if t is None:
        return out
    # one period block just inside the boundary, then the geometric series
    if t.side == LEFT_TAIL:
        block_range = range(lo, lo + t.period)
        step_exp = t.shift          # internal shift per outward step
    else:
        block_range = range(hi - t.period + 1, hi + 1)
        step_exp = -t.shift         # exponents negated in the reversed regime
    block = KClass.zero(order, regime)
    for i in block_range:
        c = _term_class(x.term(i), order, reversed_q)
        block = block + (c if i % 2 == 0 else -c)
    sgn = -1 if t.period % 2 == 1 else 1
    ratio = TruncatedSeries.from_laurent(
        LaurentPoly({step_exp: sgn}), order)
    one = TruncatedSeries.one(order)
    geom = ratio * (one - ratio).invert()    # Σ_{k>=1} ratio^k
    return out + block.scale_series(geom)


# ---------------------------------------------------------------------------
# basis conversion and the reference idempotent
# ---------------------------------------------------------------------------

def simple_to_projective_basis(k: KClass) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Coordinates in the basis of the two projective classes.

    The change of basis is unimodular: [P(1)] = [L(1)] + q[L(2)] and
    [P(2)] = q[L(1)] + (1+q²)[L(2)] invert to integral series.
    """
    if k.regime != STANDARD:
        raise RegimeError("projective-basis coordinates live in the standard completion")
    s1, s2 = k.series["1"], k.series["2"]
    order = min(s1.order, s2.order)
    q = TruncatedSeries.from_laurent(LaurentPoly({1: 1}), order)
    one_q2 = TruncatedSeries.from_laurent(LaurentPoly({0: 1, 2: 1}), order)
    # inverse of [[1, q], [q, 1+q^2]] is [[1+q^2, -q], [-q, 1]]
    p1 = one_q2 * s1 - q * s2
    p2 = -(q * s1) + s2
    return p1, p2


def projective_class(vertex: str, order: int) -> KClass:
    return class_of_summand(Summand(vertex, 0), order)


def jones_wenzl_reference(order: int) -> dict[str, dict[str, TruncatedSeries]]:
    """The action of the degree-two idempotent on the projective basis:
    the [P(2)]-column is (0, 1); the [P(1)]-column is (0, q/(1+q²)) expanded
    in the completion."""
    zero = TruncatedSeries.zero(order)
    one = TruncatedSeries.one(order)
    two = TruncatedSeries.from_laurent(LaurentPoly({1: 1, -1: 1}), order)
    col1 = two.invert().truncate(order)
    return {
        "P(1)": {"P(1)": zero, "P(2)": col1},
        "P(2)": {"P(1)": zero, "P(2)": one},
    }


def jw_matrix_square(m: dict[str, dict[str, TruncatedSeries]]
                     ) -> dict[str, dict[str, TruncatedSeries]]:
    keys = ("P(1)", "P(2)")
    out: dict[str, dict[str, TruncatedSeries]] = {k: {} for k in keys}
    for col in keys:
        for row in keys:
            acc = None
            for mid in keys:
                t = m[mid][row] * m[col][mid]
                acc = t if acc is None else acc + t
            out[col][row] = acc
    return out


def apply_jw_reference(m: dict[str, dict[str, TruncatedSeries]],
                       k: KClass) -> KClass:
    """p₂ acting on a class, via projective-basis coordinates."""
    p1, p2 = simple_to_projective_basis(k)
    order = min(p1.order, p2.order)
    new_p1 = m["P(1)"]["P(1)"] * p1 + m["P(2)"]["P(1)"] * p2
    new_p2 = m["P(1)"]["P(2)"] * p1 + m["P(2)"]["P(2)"] * p2
    out = (projective_class("1", order).scale_series(new_p1)
           + projective_class("2", order).scale_series(new_p2))
    return out


def duality_on_class(k: KClass) -> KClass:
    """Decategorified shadow of the duality functor on bounded complexes:
    q^r[L(1)] -> (-q)^{-r}[P(2)-class], q^r[L(2)] -> (-q)^{-r}[P(1)-class]."""
    if k.regime != STANDARD:
        raise RegimeError("the decategorified duality law is stated on bounded classes")
    order = min(s.order for s in k.series.values())
    out = KClass.zero(order)
    for v, target_vertex in (("1", "2"), ("2", "1")):
        s = k.series[v]
        twisted = LaurentPoly({-e: c * ((-1) ** e) for e, c in s.coeffs.items()})
        out = out + projective_class(target_vertex, order).scale_series(
            TruncatedSeries.from_laurent(twisted, order))
    return out
