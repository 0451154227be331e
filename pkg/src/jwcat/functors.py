"""The four functors on complexes: the derived projector (section functor
composed with the derived inclusion), the Koszul-type duality functor, the
translation-bimodule tensor, and the semi-infinite topological projector.

Conventions carried over from the rest of the package:

* right modules, cohomological differentials, internal shift <r> moves
  degrees up by r;
* the duality functor reads a module-level complex and emits a formal
  complex of projectives: the basis vector m of bidegree (r, s) with vertex
  label v contributes a summand P(swap(v))<-s> in homological degree r+s,
  and the differential combines the scalar part of d with the two staircase
  arrows, weighted by (-1)^(r+s);
* tensoring with the translation bimodule never needs resolutions (it is
  exact), so the topological projector is a totalization of an explicitly
  built bicomplex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .complexes import (LEFT_TAIL, RIGHT_TAIL, AlgMatrix, Complex,
                        ProjBicomplex, ProjChainMap, ProjComplex, Reduction,
                        RegimeError, Summand, WindowTooSmall,
                        detect_tail, gaussian_reduce, realize, total_complex)
from .linalg import Matrix, solve_from_columns
from .modules import (GradedModule, ModuleHom, apply_pi, apply_pi_hom,
                      projective, simple, injective2)
from .quiver import (AlgebraElement, ConstructionError, PathAlgebra,
                     build_B, build_C)
from .resolutions import resolve_complex


@dataclass
class Setup:
    """The fixed ambient data: the two-vertex algebra, its small quotient
    endomorphism algebra, and the vertex swap of the duality functor."""
    B: PathAlgebra
    C: PathAlgebra

    @classmethod
    def create(cls, d_max: int = 4) -> Setup:
        return cls(B=build_B(d_max), C=build_C(d_max))

    def swap(self, v: str) -> str:
        return "2" if v == "1" else "1"

    def standard_module(self, name: str) -> GradedModule:
        if name == "P(1)":
            return projective(self.B, "1")
        if name == "P(2)":
            return projective(self.B, "2")
        if name == "L(1)":
            return simple(self.B, "1")
        if name == "L(2)":
            return simple(self.B, "2")
        if name == "I(2)":
            return injective2(self.B)
        raise KeyError(name)


@dataclass
class ModChainMap:
    """Module-level chain map: one degree-0 ModuleHom per homological degree."""
    source: Complex
    target: Complex
    comps: dict[int, ModuleHom]
    name: str = "f"

    def comp(self, i: int) -> ModuleHom:
        h = self.comps.get(i)
        if h is None:
            return ModuleHom(self.source.term(i), self.target.term(i), 0, {},
                             "0", validate=False)
        return h

    def validate(self):
        lo = min(self.source.window()[0], self.target.window()[0])
        hi = max(self.source.window()[1], self.target.window()[1])
        for i in range(lo, hi):
            lhs = self.target.diff(i).compose(self.comp(i))
            rhs = self.comp(i + 1).compose(self.source.diff(i))
            if not (lhs - rhs).is_zero():
                raise ConstructionError(f"{self.name} is not a chain map at {i}")


def realize_chain_map(f: ProjChainMap) -> ModChainMap:
    """Module-level realization of a formal chain map."""
    from .complexes import _alg_matrix_to_hom
    src = realize(f.source)
    tgt = realize(f.target)
    comps = {}
    for i, m in f.maps.items():
        if i in src.terms and i in tgt.terms:
            comps[i] = _alg_matrix_to_hom(m, src.term(i), tgt.term(i),
                                          f.source.algebra)
    return ModChainMap(src, tgt, comps, f.name)


@dataclass
class FunctorReport:
    """What a functor application produced: the raw output, its minimal
    form, and the reduction witnesses relating them."""
    input_desc: str
    raw: ProjComplex
    reduced: ProjComplex
    reduction: Reduction
    notes: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# the projector: section functor, derived inclusion
# ---------------------------------------------------------------------------

def _pi_fast(setup: Setup, x: ProjComplex) -> ProjComplex | None:
    """Translate a complex all of whose summands sit at vertex 2 directly to
    the quotient algebra: P(2)<r> becomes a free summand <r-1>, the loop ab
    becomes the degree-2 generator."""
    for t in x.terms.values():
        if any(s.vertex != "2" for s in t):
            return None
    C = setup.C
    c_path = setup.B.path_element(("a", "b"))

    def entry_to_c(z: AlgebraElement) -> AlgebraElement:
        lam = z.scalar_part()
        mu = z.coefficient(next(iter(c_path.terms)))
        out = C.zero()
        if lam:
            out = out + C.idempotent("*").scale(lam)
        if mu:
            out = out + C.arrow_element("x").scale(mu)
        return out

    terms = {i: tuple(Summand("*", s.shift - 1) for s in t)
             for i, t in x.terms.items()}
    diffs = {}
    for i, d in x.diffs.items():
        nd = AlgMatrix.zero(C, terms[i + 1], terms[i])
        for r in range(len(d.rows)):
            for c in range(len(d.cols)):
                nd.entries[r][c] = entry_to_c(d.entries[r][c])
        diffs[i] = nd
    return ProjComplex(C, terms, diffs, x.tail, f"π({x.name})", validate=True)


def iota_translate(setup: Setup, freeC: ProjComplex,
                   maps: dict[int, AlgMatrix] | None = None) -> ProjComplex:
    """The inclusion functor on free complexes: each free summand <r> becomes
    P(2)<r+1>, the degree-2 generator becomes the loop."""
    B, C = setup.B, setup.C
    x_path = next(iter(C.arrow_element("x").terms))
    c_elem = B.path_element(("a", "b"))

    def entry_to_b(z: AlgebraElement) -> AlgebraElement:
        lam = z.scalar_part()
        mu = z.coefficient(x_path)
        out = B.zero()
        if lam:
            out = out + B.idempotent("2").scale(lam)
        if mu:
            out = out + c_elem.scale(mu)
        return out

    terms = {i: tuple(Summand("2", s.shift + 1) for s in t)
             for i, t in freeC.terms.items()}
    diffs = {}
    for i, d in freeC.diffs.items():
        nd = AlgMatrix.zero(B, terms[i + 1], terms[i])
        for r in range(len(d.rows)):
            for c in range(len(d.cols)):
                nd.entries[r][c] = entry_to_b(d.entries[r][c])
        diffs[i] = nd
    return ProjComplex(B, terms, diffs, freeC.tail, f"ι({freeC.name})", validate=True)


def _iota_translate_matrix(setup: Setup, m: AlgMatrix) -> AlgMatrix:
    B, C = setup.B, setup.C
    x_path = next(iter(C.arrow_element("x").terms))
    c_elem = B.path_element(("a", "b"))
    rows = tuple(Summand("2", s.shift + 1) for s in m.rows)
    cols = tuple(Summand("2", s.shift + 1) for s in m.cols)
    out = AlgMatrix.zero(B, rows, cols)
    for r in range(len(m.rows)):
        for c in range(len(m.cols)):
            z = m.entries[r][c]
            lam, mu = z.scalar_part(), z.coefficient(x_path)
            e = B.zero()
            if lam:
                e = e + B.idempotent("2").scale(lam)
            if mu:
                e = e + c_elem.scale(mu)
            out.entries[r][c] = e
    return out


def _as_module_complex(setup: Setup, x) -> Complex:
    if isinstance(x, GradedModule):
        return Complex.from_module(x)
    if isinstance(x, ProjComplex):
        return realize(x)
    if isinstance(x, Complex):
        return x
    raise TypeError(f"cannot interpret {x!r} as a complex")


def P_on_object(setup: Setup, x, depth: int = 16) -> ProjComplex:
    """The categorified projector on objects.

    Applies the section functor termwise (exact), replaces the result by a
    termwise-surjective free resolution, and applies the inclusion functor
    termwise (exact on frees). Complexes whose section image is already
    termwise free skip the resolution step.
    """
    if isinstance(x, ProjComplex):
        if x.tail is not None and x.tail.side == RIGHT_TAIL:
            raise RegimeError("projector input must be bounded above")
        fast = _pi_fast(setup, x)
        if fast is not None:
            out = iota_translate(setup, fast)
            out.name = f"ℙ({x.name})"
            return out
        x = realize(x)
    Y = _as_module_complex(setup, x)
    if Y.tail is not None and Y.tail.side == RIGHT_TAIL:
        raise RegimeError("projector input must be bounded above")
    piY = Complex(setup.C,
                  {i: apply_pi(m, setup.C) for i, m in Y.terms.items()},
                  {i: apply_pi_hom(d, setup.C) for i, d in Y.diffs.items()},
                  Y.tail, f"π({Y.name})", validate=True)
    if piY.is_zero():
        return ProjComplex.zero_complex(setup.B)
    res, _aug = resolve_complex(piY, depth)
    out = iota_translate(setup, res)
    out.name = f"ℙ({Y.name})"
    return out


def P_on_map(setup: Setup, z: AlgebraElement, source: GradedModule,
             target: GradedModule, depth: int = 16
             ) -> tuple[ProjChainMap, ProjComplex, ProjComplex]:
    """The projector on a left-multiplication generator map between shifted
    projectives: lift the section image through the free resolutions, then
    include. Returns the chain map together with its source and target."""
    from .modules import left_multiplication_hom
    f = left_multiplication_hom(source, target, z)
    return P_on_module_map(setup, f, depth)


def P_on_module_map(setup: Setup, f: ModuleHom, depth: int = 16
                    ) -> tuple[ProjChainMap, ProjComplex, ProjComplex]:
    if f.degree != 0:
        raise ConstructionError("shift the source so the map has degree 0")
    C = setup.C
    piM = Complex.from_module(apply_pi(f.source, C))
    piN = Complex.from_module(apply_pi(f.target, C))
    pif = apply_pi_hom(f, C)
    resM, augM = resolve_complex(piM, depth)
    resN, augN = resolve_complex(piN, depth)
    lift = lift_through_resolutions(setup.C, resM, augM, resN, augN, pif)
    srcB = iota_translate(setup, resM)
    tgtB = iota_translate(setup, resN)
    comps = {i: _iota_translate_matrix(setup, m) for i, m in lift.items()}
    fmap = ProjChainMap(srcB, tgtB, comps, f"ℙ({f.name})", validate=True)
    return fmap, srcB, tgtB


def lift_through_resolutions(alg: PathAlgebra, resM: ProjComplex,
                             augM: dict[int, ModuleHom], resN: ProjComplex,
                             augN: dict[int, ModuleHom], f0: ModuleHom
                             ) -> dict[int, AlgMatrix]:
    """Comparison lift: chain map between resolutions covering a single
    module map (concentrated in homological degree 0)."""
    from .complexes import _alg_matrix_to_hom, _unknown_slots, _mat_from_slots
    lift: dict[int, AlgMatrix] = {}
    loM = resM.window()[0]
    srcR = realize(resM)
    tgtR = realize(resN)
    for i in range(0, loM - 1, -1):
        rows, cols = resN.term(i), resM.term(i)
        slots = _unknown_slots(alg, rows, cols)
        if not slots:
            lift[i] = AlgMatrix.zero(alg, rows, cols)
            continue

        def residual(mat: AlgMatrix, i=i) -> list[Fraction]:
            out: list[Fraction] = []
            hom = _alg_matrix_to_hom(mat, srcR.term(i), tgtR.term(i), alg)
            if i == 0:
                # augN ∘ phi_0 = f0 ∘ augM
                want = f0.compose(augM[0])
                got = augN[0].compose(hom)
            else:
                # d_N ∘ phi_i = phi_{i+1} ∘ d_M
                dN = _alg_matrix_to_hom(resN.diff(i), tgtR.term(i), tgtR.term(i + 1), alg)
                dM = _alg_matrix_to_hom(resM.diff(i), srcR.term(i), srcR.term(i + 1), alg)
                prev = _alg_matrix_to_hom(lift[i + 1], srcR.term(i + 1),
                                          tgtR.term(i + 1), alg)
                want = prev.compose(dM)
                got = dN.compose(hom)
            diff = got - want
            degs = sorted(set(srcR.term(i).degrees()))
            for d in degs:
                m = diff.mat(d)
                out.extend(x for row in m.data for x in row)
            return out

        zero_mat = AlgMatrix.zero(alg, rows, cols)
        base = residual(zero_mat)
        rhs = [-x for x in base]

        def column(k):
            vec = [Fraction(0)] * len(slots)
            vec[k] = Fraction(1)
            mat = _mat_from_slots(alg, rows, cols, slots, vec)
            return [a - b for a, b in zip(residual(mat), base)]

        sol = solve_from_columns(column, len(slots), rhs)
        if sol is None:
            raise ConstructionError(f"resolution lift failed at degree {i}")
        lift[i] = _mat_from_slots(alg, rows, cols, slots, sol)
    return lift


# ---------------------------------------------------------------------------
# the duality functor
# ---------------------------------------------------------------------------

def koszul_D_on_object(setup: Setup, x, out_window: tuple[int, int] | None = None,
                       name: str | None = None) -> ProjComplex:
    """Bigraded construction: each basis vector of bidegree (r, s) and label v
    gives a summand P(swap v)<-s> at homological degree r+s, with the scalar
    part of d plus the signed staircase arrows as differential."""
    B = setup.B
    Y = _as_module_complex(setup, x)
    if Y.tail is not None and Y.tail.side == RIGHT_TAIL:
        raise RegimeError("duality input must be bounded above")
    if out_window is None:
        lo, hi = Y.window()
        smin = min((d for m in Y.terms.values() for d in m.degrees()), default=0)
        smax = max((d for m in Y.terms.values() for d in m.degrees()), default=0)
        out_window = (lo + smin, hi + smax)
    out_lo, out_hi = out_window

    mat = Y
    p_safe = out_hi
    if Y.tail is not None and Y.tail.side == LEFT_TAIL:
        # extend until omitted terms can only hit degrees beyond out_hi
        lo, hi = Y.window()
        while True:
            smin = min(mat.term(lo).degrees())
            if lo + smin > out_hi + 1:
                break
            lo -= 1
            prototype = mat.term(lo + mat.tail.period)
            mat = Complex(
                Y.algebra,
                {**mat.terms, lo: prototype.shift(mat.tail.shift)},
                {**mat.diffs,
                 lo: mat.diff(lo + mat.tail.period).shift(mat.tail.shift)},
                mat.tail, mat.name, validate=False)
        omit_min = min(mat.term(lo).degrees()) + mat.tail.shift
        p_safe = min(p_safe, (lo - 1) + omit_min - 1)

    # collect basis vectors: (r, s, index) ordered r descending within a degree
    vector_index: dict[int, list[tuple[int, int, int, str]]] = {}
    for r, M in mat.terms.items():
        for s in M.degrees():
            for idx in range(M.dim(s)):
                p = r + s
                if out_lo <= p <= out_hi:
                    vector_index.setdefault(p, []).append((r, s, idx, M.label(s, idx)))
    for p in vector_index:
        vector_index[p].sort(key=lambda t: (-t[0], t[2]))

    terms: dict[int, tuple[Summand, ...]] = {}
    pos: dict[int, dict[tuple[int, int, int], int]] = {}
    for p, vecs in sorted(vector_index.items()):
        terms[p] = tuple(Summand(setup.swap(lab), -s) for (r, s, idx, lab) in vecs)
        pos[p] = {(r, s, idx): k for k, (r, s, idx, lab) in enumerate(vecs)}

    a_el, b_el = B.arrow_element("a"), B.arrow_element("b")
    diffs: dict[int, AlgMatrix] = {}
    for p in sorted(terms):
        if (p + 1) not in terms:
            continue
        d = AlgMatrix.zero(B, terms[p + 1], terms[p])
        for (r, s, idx, lab) in vector_index[p]:
            col = pos[p][(r, s, idx)]
            sign = -1 if (r + s) % 2 else 1
            M = mat.term(r)
            # scalar part: the complex differential, same s
            dmat = mat.diff(r).mat(s)
            for ridx in range(dmat.nrows):
                coef = dmat.data[ridx][idx]
                if coef != 0 and (r + 1, s, ridx) in pos.get(p + 1, {}):
                    row = pos[p + 1][(r + 1, s, ridx)]
                    d.entries[row][col] = d.entries[row][col] + \
                        B.idempotent(setup.swap(lab)).scale(coef)
            # staircase arrows, with the parity sign
            for arrow_el, need_lab in ((a_el, "2"), (b_el, "1")):
                if lab != need_lab:
                    continue
                act = M.act_element(arrow_el, s)
                for ridx in range(act.nrows):
                    coef = act.data[ridx][idx]
                    if coef != 0 and (r, s + 1, ridx) in pos.get(p + 1, {}):
                        row = pos[p + 1][(r, s + 1, ridx)]
                        d.entries[row][col] = d.entries[row][col] + \
                            arrow_el.scale(sign * coef)
        diffs[p] = d

    out = ProjComplex(B, terms, diffs, None, name or f"𝔻({Y.name})", validate=True)
    if Y.tail is not None:
        out = out.clip(out_lo, min(out_hi, p_safe))
        tail = detect_tail(out, RIGHT_TAIL)
        if tail is None:
            raise WindowTooSmall("duality output did not stabilize; enlarge the window")
        out = ProjComplex(B, out.terms, out.diffs, tail, out.name, validate=True)
    return out


def koszul_D_on_map(setup: Setup, f: ModChainMap,
                    out_window: tuple[int, int],
                    dual_source: ProjComplex | None = None,
                    dual_target: ProjComplex | None = None
                    ) -> tuple[ProjChainMap, ProjComplex, ProjComplex]:
    """Induced map m⊗g -> f(m)⊗g: entries are the scalar coefficients of f
    placed between matching summands."""
    B = setup.B
    X, Yc = f.source, f.target
    DX = dual_source if dual_source is not None else koszul_D_on_object(setup, X, out_window)
    DY = dual_target if dual_target is not None else koszul_D_on_object(setup, Yc, out_window)

    def index_of(c: Complex, out_lo, out_hi):
        vi: dict[int, list[tuple[int, int, int, str]]] = {}
        for r, M in c.terms.items():
            for s in M.degrees():
                for idx in range(M.dim(s)):
                    p = r + s
                    if out_lo <= p <= out_hi:
                        vi.setdefault(p, []).append((r, s, idx, M.label(s, idx)))
        for p in vi:
            vi[p].sort(key=lambda t: (-t[0], t[2]))
        return vi

    lo, hi = out_window
    # materialize like the object functor did
    Xm, Ym = X, Yc
    vx = index_of(Xm, lo, hi)
    vy = index_of(Ym, lo, hi)
    comps: dict[int, AlgMatrix] = {}
    for p in sorted(set(vx) & set(vy)):
        if p > min(DX.window()[1], DY.window()[1]):
            continue
        m = AlgMatrix.zero(B, DY.term(p), DX.term(p))
        posx = {(r, s, i): k for k, (r, s, i, lab) in enumerate(vx[p])}
        posy = {(r, s, i): k for k, (r, s, i, lab) in enumerate(vy[p])}
        for (r, s, idx, lab) in vx[p]:
            fm = f.comp(r).mat(s)
            for ridx in range(fm.nrows):
                coef = fm.data[ridx][idx]
                if coef != 0 and (r, s, ridx) in posy:
                    m.entries[posy[(r, s, ridx)]][posx[(r, s, idx)]] = \
                        B.idempotent(setup.swap(lab)).scale(coef)
        comps[p] = m
    out = ProjChainMap(DX, DY, comps, f"𝔻({f.name})", validate=True)
    return out, DX, DY


# ---------------------------------------------------------------------------
# the topological projector
# ---------------------------------------------------------------------------

@dataclass
class CKComplex:
    """The semi-infinite complex of bimodules: the regular bimodule, then
    shifted copies of the translation bimodule with the three structure maps
    alternating; 2-periodic after the first step."""
    terms: list            # [regular bimodule, theta<-1>, theta<-3>, ...]
    maps: list             # [alpha, beta, gamma, beta, gamma, ...]
    period: int = 2
    shift_per_period: int = -4

    def check_composites_vanish(self) -> bool:
        return all(self.maps[i + 1].compose(self.maps[i]).is_zero()
                   for i in range(len(self.maps) - 1))


def ck_bimodule_complex(setup: Setup, depth: int = 6) -> CKComplex:
    from .quiver import (algebra_as_bimodule, bimodule_maps_alpha_beta_gamma,
                         build_theta)
    B = setup.B
    theta = build_theta(B)
    alpha, beta, gamma = bimodule_maps_alpha_beta_gamma(B, theta)
    terms = [algebra_as_bimodule(B)] + [theta] * depth
    maps = [alpha]
    for k in range(1, depth):
        maps.append(beta if k % 2 == 1 else gamma)
    ck = CKComplex(terms, maps)
    if not ck.check_composites_vanish():
        raise ConstructionError("consecutive structure maps do not compose to zero")
    return ck


def _theta_parts(setup: Setup, s: Summand, k: int) -> tuple[Summand, ...]:
    """Summands of (one projective) ⊗ theta<-(2k-1)>: at vertex 2 the low and
    high copies, at vertex 1 a single copy."""
    if s.vertex == "2":
        return (Summand("2", s.shift - 2 * k), Summand("2", s.shift - 2 * k + 2))
    return (Summand("2", s.shift - 2 * k + 1),)


def _theta_block(setup: Setup, z: AlgebraElement, src: Summand, tgt: Summand,
                 k: int) -> AlgMatrix:
    """Induced scalar block of z ⊗ id between theta-parts at column k >= 1."""
    B = setup.B
    rows = _theta_parts(setup, tgt, k)
    cols = _theta_parts(setup, src, k)
    out = AlgMatrix.zero(B, rows, cols)
    src_basis = _pe2_basis(B, src.vertex)
    tgt_basis = _pe2_basis(B, tgt.vertex)
    for j, p in enumerate(src_basis):
        for q, coef in z.terms.items():
            r = B.mul_paths(q, p)
            if r is None:
                continue
            if r in tgt_basis:
                i = tgt_basis.index(r)
                out.entries[i][j] = out.entries[i][j] + B.idempotent("2").scale(coef)
    return out


def _pe2_basis(B: PathAlgebra, vertex: str):
    """Basis of (paths into 2) within P(vertex): source-2 paths with the given
    target, ordered low degree first."""
    paths = [p for p in B.basis if B.target(p) == vertex and B.source(p) == "2"]
    return sorted(paths, key=lambda p: (B.path_degree(p), p.word()))


def _ck_column_map(setup: Setup, s: Summand, k: int) -> AlgMatrix:
    """The structure map of the projector complex on one projective summand,
    from column k to k+1."""
    B = setup.B
    c = B.path_element(("a", "b"))
    e2 = B.idempotent("2")
    a = B.arrow_element("a")
    if k == 0:
        rows = _theta_parts(setup, s, 1)
        cols = (s,)
        m = AlgMatrix.zero(B, rows, cols)
        if s.vertex == "2":
            m.entries[0][0] = c
            m.entries[1][0] = e2
        else:
            m.entries[0][0] = a
        return m
    rows = _theta_parts(setup, s, k + 1)
    cols = _theta_parts(setup, s, k)
    sign = -1 if k % 2 == 1 else 1   # beta on odd columns, gamma on even
    m = AlgMatrix.zero(B, rows, cols)
    if s.vertex == "2":
        m.entries[0][0] = c.scale(sign)
        m.entries[1][0] = e2
        m.entries[1][1] = c.scale(sign)
    else:
        m.entries[0][0] = c.scale(sign)
    return m


def ck_bicomplex(setup: Setup, x: ProjComplex, K: int) -> ProjBicomplex:
    """X ⊗ projector complex, horizontal = projector column index."""
    if x.tail is not None and x.tail.side == LEFT_TAIL:
        raise RegimeError("topological projector input must be bounded below")
    B = setup.B
    terms: dict[tuple[int, int], tuple[Summand, ...]] = {}
    offsets: dict[tuple[int, int], list[int]] = {}
    for i, t in x.terms.items():
        for k in range(K + 1):
            flat: list[Summand] = []
            offs = []
            for s in t:
                offs.append(len(flat))
                flat.extend((s,) if k == 0 else _theta_parts(setup, s, k))
            terms[(k, i)] = tuple(flat)
            offsets[(k, i)] = offs
    d1: dict[tuple[int, int], AlgMatrix] = {}
    d2: dict[tuple[int, int], AlgMatrix] = {}
    for i, t in x.terms.items():
        for k in range(K):
            m = AlgMatrix.zero(B, terms[(k + 1, i)], terms[(k, i)])
            for s_idx, s in enumerate(t):
                blk = _ck_column_map(setup, s, k)
                ro = offsets[(k + 1, i)][s_idx]
                co = offsets[(k, i)][s_idx]
                for r in range(len(blk.rows)):
                    for c in range(len(blk.cols)):
                        m.entries[ro + r][co + c] = blk.entries[r][c]
            d1[(k, i)] = m
    for i in x.terms:
        if (i + 1) not in x.terms:
            continue
        dx = x.diff(i)
        for k in range(K + 1):
            m = AlgMatrix.zero(B, terms[(k, i + 1)], terms[(k, i)])
            for ti, trow in enumerate(dx.rows):
                for tj, tcol in enumerate(dx.cols):
                    z = dx.entries[ti][tj]
                    if z.is_zero():
                        continue
                    if k == 0:
                        m.entries[offsets[(0, i + 1)][ti]][offsets[(0, i)][tj]] = z
                    else:
                        blk = _theta_block(setup, z, tcol, trow, k)
                        ro = offsets[(k, i + 1)][ti]
                        co = offsets[(k, i)][tj]
                        for r in range(len(blk.rows)):
                            for c in range(len(blk.cols)):
                                m.entries[ro + r][co + c] = blk.entries[r][c]
            d2[(k, i)] = m
    return ProjBicomplex(B, terms, d1, d2, name=f"{x.name}⊗CK")


def CK_on_object(setup: Setup, x, out_window: tuple[int, int] | None = None,
                 name: str | None = None) -> ProjComplex:
    """Total complex of the tensor with the semi-infinite projector complex."""
    if not isinstance(x, ProjComplex):
        raise TypeError("topological projector consumes formal complexes of projectives")
    if x.is_zero():
        return ProjComplex.zero_complex(setup.B)
    if out_window is None:
        lo, hi = x.window()
        out_window = (lo, hi + 8)
    out_lo, out_hi = out_window
    if x.tail is not None and x.tail.side == RIGHT_TAIL:
        x = x.materialize(x.window()[0], out_hi + 2)
    x_lo = x.window()[0]
    K = out_hi - x_lo + 2
    bc = ck_bicomplex(setup, x, K)
    tot = total_complex(bc, None, name=name or f"ℂ𝕂({x.name})")
    # total degree n is complete iff every contributing column k <= K was built
    safe_hi = min(out_hi, K + x_lo - 1)
    tot = tot.clip(out_lo, safe_hi)
    # the raw tensor is always right-infinite for nonzero input, so a missing
    # pattern means the window cannot certify the tail, never boundedness
    tail = detect_tail(tot, RIGHT_TAIL)
    if tail is None:
        raise WindowTooSmall(
            f"projector tensor output did not stabilize on window {out_window}")
    tot = ProjComplex(setup.B, tot.terms, tot.diffs, tail, tot.name, validate=True)
    return tot


def CK_on_map(setup: Setup, f: ProjChainMap,
              out_window: tuple[int, int],
              ck_source: ProjComplex | None = None,
              ck_target: ProjComplex | None = None
              ) -> tuple[ProjChainMap, ProjComplex, ProjComplex]:
    """Termwise f ⊗ id through the totalization."""
    B = setup.B
    X, Y = f.source, f.target
    lo, hi = out_window
    CX = ck_source if ck_source is not None else CK_on_object(setup, X, out_window)
    CY = ck_target if ck_target is not None else CK_on_object(setup, Y, out_window)
    if X.tail is not None and X.tail.side == RIGHT_TAIL:
        X = X.materialize(X.window()[0], hi + 2)
    if Y.tail is not None and Y.tail.side == RIGHT_TAIL:
        Y = Y.materialize(Y.window()[0], hi + 2)

    def layout(xc: ProjComplex, n: int):
        cells = []
        for i in sorted(xc.terms):
            k = n - i
            if k >= 0:
                cells.append((k, i))
        cells.sort()
        out = []
        for (k, i) in cells:
            offs = []
            cnt = 0
            for s in xc.term(i):
                offs.append(cnt)
                cnt += 1 if k == 0 else len(_theta_parts(setup, s, k))
            out.append(((k, i), offs, cnt))
        return out

    comps: dict[int, AlgMatrix] = {}
    for n in range(lo, min(CX.window()[1], CY.window()[1]) + 1):
        lx = layout(X, n)
        ly = layout(Y, n)
        if sum(c for (_cell, _o, c) in lx) != len(CX.term(n)):
            continue
        if sum(c for (_cell, _o, c) in ly) != len(CY.term(n)):
            continue
        m = AlgMatrix.zero(B, CY.term(n), CX.term(n))
        xoff = 0
        for ((k, i), offs_x, cnt_x) in lx:
            yoff = 0
            for ((k2, i2), offs_y, cnt_y) in ly:
                if (k2, i2) == (k, i):
                    fm = f.component(i)
                    for ti in range(len(fm.rows)):
                        for tj in range(len(fm.cols)):
                            z = fm.entries[ti][tj]
                            if z.is_zero():
                                continue
                            if k == 0:
                                m.entries[yoff + offs_y[ti]][xoff + offs_x[tj]] = z
                            else:
                                blk = _theta_block(setup, z, fm.cols[tj], fm.rows[ti], k)
                                for r in range(len(blk.rows)):
                                    for c in range(len(blk.cols)):
                                        m.entries[yoff + offs_y[ti] + r][xoff + offs_x[tj] + c] = blk.entries[r][c]
                yoff += cnt_y
            xoff += cnt_x
        comps[n] = m
    out = ProjChainMap(CX, CY, comps, f"ℂ𝕂({f.name})", validate=True)
    return out, CX, CY


# ---------------------------------------------------------------------------
# named composite constructions
# ---------------------------------------------------------------------------

def D_of_P1(setup: Setup) -> FunctorReport:
    """The duality functor on the big projective's partner: computed from the
    bigraded formula, reduced, and checked against the two-term model."""
    P1 = projective(setup.B, "1")
    raw = koszul_D_on_object(setup, P1, name="𝔻(P(1))")
    red = gaussian_reduce(raw)
    model = two_term_dual_model(setup)
    if not (red.reduced.terms == model.terms and red.reduced.diffs == model.diffs):
        raise ConstructionError("duality image of P(1) does not match the two-term model")
    return FunctorReport("P(1)", raw, red.reduced, red)


def two_term_dual_model(setup: Setup) -> ProjComplex:
    """0 -> P(2) -> P(1)<-1> -> 0 with the length-one map, degree one at the
    right."""
    B = setup.B
    t0, t1 = (Summand("2", 0),), (Summand("1", -1),)
    d = AlgMatrix(B, t1, t0, [[B.arrow_element("b")]])
    return ProjComplex(B, {0: t0, 1: t1}, {0: d}, name="dual-P(1)-model")


def functor_report(setup: Setup, raw: ProjComplex, window: tuple[int, int],
                   desc: str) -> FunctorReport:
    margin = 0 if raw.tail is None else 2 * raw.tail.period + 2
    lo, hi = window
    mat = raw.materialize(lo, hi + margin) if raw.tail is not None else raw
    red = gaussian_reduce(mat, keep_window=window)
    return FunctorReport(desc, raw, red.reduced, red)
