"""Minimal projective resolutions of modules, and termwise-surjective free
resolutions of bounded-above complexes.

The complex resolver builds, by descending induction, a projective complex P
with a quasi-isomorphism onto the input: at each step the new term is a
minimal cover of the fiber product {(y, p) : p a cycle one degree up,
augmentation(p) = d(y)}, which simultaneously fixes surjectivity of the
augmentation, the cycle-lifting property, and the cohomology comparison.
For a single module this degenerates to the usual minimal resolution by
iterated projective covers.
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import (LEFT_TAIL, AlgMatrix, Complex, ProjComplex, Summand,
                        WindowTooSmall, detect_tail)
from .linalg import Matrix
from .modules import GradedModule, ModuleHom, direct_sum, projective
from .quiver import ConstructionError, PathAlgebra, Path


# ---------------------------------------------------------------------------
# submodules
# ---------------------------------------------------------------------------

def submodule_from_vectors(ambient: GradedModule,
                           vectors: dict[int, list[list[Fraction]]],
                           name: str = "K") -> tuple[GradedModule, ModuleHom]:
    """The submodule spanned by label-homogeneous vectors, with inclusion.

    Vectors are given per internal degree in ambient coordinates; each must
    be supported on basis vectors of a single vertex label, and the span must
    be closed under the algebra action (checked exactly).
    """
    alg = ambient.algebra
    bases: dict[int, list[list[Fraction]]] = {}
    labels: dict[int, list[str]] = {}
    for d, vecs in sorted(vectors.items()):
        if not vecs:
            continue
        R, piv = Matrix.from_rows(vecs).rref()
        basis_rows = [R.data[r] for r in range(len(piv))]
        labs = []
        for row in basis_rows:
            support_labels = {ambient.label(d, j) for j, x in enumerate(row) if x != 0}
            if len(support_labels) != 1:
                raise ConstructionError("submodule basis vector is not label-homogeneous")
            labs.append(support_labels.pop())
        bases[d] = basis_rows
        labels[d] = labs
    basis = {d: tuple(labels[d]) for d in bases}
    action: dict[str, dict[int, Matrix]] = {}
    for arrow in alg.quiver.arrows:
        g, dg = arrow.name, arrow.degree
        mats: dict[int, Matrix] = {}
        for d, rows in bases.items():
            td = d + dg
            tgt_rows = bases.get(td, [])
            m = Matrix(len(tgt_rows), len(rows))
            amb = ambient.act_arrow(g, d)
            for j, vec in enumerate(rows):
                img = amb.apply(vec)
                if all(x == 0 for x in img):
                    continue
                if not tgt_rows:
                    raise ConstructionError("submodule is not action-closed")
                T = Matrix(len(img), len(tgt_rows),
                           [[tgt_rows[c][rr] for c in range(len(tgt_rows))]
                            for rr in range(len(img))])
                sol = T.solve(img)
                if sol is None:
                    raise ConstructionError("submodule is not action-closed")
                for r, x in enumerate(sol):
                    m.data[r][j] = x
            if not m.is_zero():
                mats[d] = m
        if mats:
            action[g] = mats
    sub = GradedModule(alg, basis, action, name=name)
    incl_mats = {d: Matrix(len(ambient.basis.get(d, ())), len(rows),
                           [[rows[j][i] for j in range(len(rows))]
                            for i in range(len(ambient.basis.get(d, ())))])
                 for d, rows in bases.items()}
    incl = ModuleHom(sub, ambient, 0, incl_mats, f"incl({name})")
    return sub, incl


def kernel_submodule(f: ModuleHom, name: str = "ker") -> tuple[GradedModule, ModuleHom]:
    """Kernel of a degree-0 module map, per (degree, label) block."""
    M = f.source
    vectors: dict[int, list[list[Fraction]]] = {}
    for d in M.degrees():
        mat = f.mat(d)
        vecs: list[list[Fraction]] = []
        for v in sorted(set(M.basis.get(d, ()))):
            cols = [k for k in range(M.dim(d)) if M.label(d, k) == v]
            tgt = f.target
            rows = [k for k in range(tgt.dim(d + f.degree))
                    if tgt.label(d + f.degree, k) == v]
            blk = mat.submatrix(rows, cols) if rows else Matrix(0, len(cols))
            for kv in blk.nullspace():
                full = [Fraction(0)] * M.dim(d)
                for c, x in zip(cols, kv):
                    full[c] = x
                vecs.append(full)
        if vecs:
            vectors[d] = vecs
    return submodule_from_vectors(M, vectors, name=name)


# ---------------------------------------------------------------------------
# minimal covers
# ---------------------------------------------------------------------------

def minimal_generators(M: GradedModule) -> list[tuple[int, int, list[Fraction]]]:
    """Representatives of a basis of M modulo M·radical: (degree, label-index
    placeholder, coordinate vector). Ties broken by degree then vertex order
    then position, which makes covers canonical."""
    alg = M.algebra
    gens = []
    for d in M.degrees():
        n = M.dim(d)
        rad_rows: list[list[Fraction]] = []
        for arrow in alg.quiver.arrows:
            g, dg = arrow.name, arrow.degree
            src_d = d - dg
            if M.dim(src_d) == 0:
                continue
            mat = M.act_arrow(g, src_d)
            for j in range(mat.ncols):
                rad_rows.append([mat.data[r][j] for r in range(n)])
        if rad_rows:
            R, piv = Matrix.from_rows(rad_rows).rref()
            pivset = set(piv)
        else:
            R, piv, pivset = Matrix(0, n), [], set()
        # complement of the radical part: unit vectors at non-pivot positions,
        # in vertex order then position order
        order = sorted(range(n), key=lambda k: (M.algebra.quiver.vertices.index(M.label(d, k)), k))
        chosen: list[list[Fraction]] = []
        span_rows = [R.data[r][:] for r in range(len(piv))]
        rank = len(piv)
        for k in order:
            if rank + len(chosen) >= n:
                break
            cand = [Fraction(0)] * n
            cand[k] = Fraction(1)
            trial = span_rows + [c[:] for c in chosen] + [cand]
            if Matrix.from_rows(trial).rank() == rank + len(chosen) + 1:
                chosen.append(cand)
        for vec in chosen:
            lab_idx = next(j for j, x in enumerate(vec) if x != 0)
            gens.append((d, lab_idx, vec))
    return gens


def projective_cover(M: GradedModule) -> tuple[tuple[Summand, ...], ModuleHom]:
    """Minimal cover ⊕ P(v)<d> ↠ M with the covering map."""
    alg = M.algebra
    gens = minimal_generators(M)
    summands = tuple(Summand(M.label(d, lab_idx), d) for (d, lab_idx, _vec) in gens)
    cover = direct_sum([projective(alg, s.vertex).shift(s.shift) for s in summands],
                       alg)
    mats = _extend_generators_to_hom(cover, summands, M,
                                     [vec for (_d, _i, vec) in gens])
    eps = ModuleHom(cover, M, 0, mats, "cover")
    return summands, eps


def _extend_generators_to_hom(cover: GradedModule, summands: tuple[Summand, ...],
                              target: GradedModule,
                              gen_images: list[list[Fraction]]) -> dict[int, Matrix]:
    """Module map on a sum of cyclic projectives from its generator images:
    the basis path q in summand s goes to (image of the s-generator)·q."""
    alg = target.algebra
    mats: dict[int, Matrix] = {}
    col_pos: dict[int, int] = {}
    for s_idx, s in enumerate(summands):
        paths = [p for p in alg.basis if alg.target(p) == s.vertex]
        paths_by_deg: dict[int, list[Path]] = {}
        for p in paths:
            paths_by_deg.setdefault(alg.path_degree(p) + s.shift, []).append(p)
        img0 = gen_images[s_idx]
        for d, ps in sorted(paths_by_deg.items()):
            for p in sorted(ps, key=lambda p: p.word()):
                col = _summand_path_column(cover, summands, s_idx, d)
                # position of this path within the summand's degree-d block
                loc = sorted(ps, key=lambda p: p.word()).index(p)
                col += loc
                vec = img0
                if not p.is_trivial():
                    mat = target.act_path(p, s.shift)
                    vec = mat.apply(img0)
                m = mats.setdefault(d, Matrix(target.dim(d), cover.dim(d)))
                for r, x in enumerate(vec):
                    m.data[r][col] = x
    return {d: m for d, m in mats.items() if not m.is_zero()}


def _summand_path_column(cover: GradedModule, summands: tuple[Summand, ...],
                         s_idx: int, d: int) -> int:
    """Offset of summand s_idx within the degree-d block of the cover."""
    alg = cover.algebra
    off = 0
    for k in range(s_idx):
        s = summands[k]
        cnt = sum(1 for p in alg.basis
                  if alg.target(p) == s.vertex and alg.path_degree(p) + s.shift == d)
        off += cnt
    return off


# ---------------------------------------------------------------------------
# resolutions
# ---------------------------------------------------------------------------

def projective_resolution(M: GradedModule, depth: int,
                          name: str | None = None) -> ProjComplex:
    """Minimal resolution by iterated covers, truncated at ``depth`` steps;
    attaches a left tail when the syzygy pattern becomes periodic."""
    alg = M.algebra
    if M.is_zero():
        return ProjComplex.zero_complex(alg)
    terms: dict[int, tuple[Summand, ...]] = {}
    diffs: dict[int, AlgMatrix] = {}
    current = M
    prev_incl: ModuleHom | None = None
    exhausted = False
    for k in range(depth + 1):
        summands, eps = projective_cover(current)
        terms[-k] = summands
        if k > 0:
            # differential F_k -> F_{k-1} is (syzygy inclusion) ∘ (new cover)
            comp = prev_incl.compose(eps)
            diffs[-k] = _hom_to_alg_matrix(comp, summands, terms[-k + 1], alg)
        ker, incl = kernel_submodule(eps, name=f"syz{k + 1}")
        if ker.is_zero():
            exhausted = True
            break
        prev_incl = incl
        current = ker
    pc = ProjComplex(alg, terms, diffs, None, name or f"res({M.name})")
    if not exhausted:
        tail = detect_tail(pc, LEFT_TAIL)
        if tail is None:
            raise WindowTooSmall(
                f"resolution of {M.name} neither terminates nor stabilizes at depth {depth}")
        pc = ProjComplex(alg, terms, diffs, tail, pc.name, validate=True)
    return pc


def _hom_to_alg_matrix(f: ModuleHom, src_summands: tuple[Summand, ...],
                       tgt_summands: tuple[Summand, ...],
                       alg: PathAlgebra) -> AlgMatrix:
    """Recover left-multiplication entries of a degree-0 map between sums of
    cyclic projectives from the images of the summand generators."""
    out = AlgMatrix.zero(alg, tgt_summands, src_summands)
    tgt_mods = [projective(alg, s.vertex).shift(s.shift) for s in tgt_summands]
    tgt_offs: dict[int, list[tuple[int, Path]]] = {}
    for b_idx, (s, mod) in enumerate(zip(tgt_summands, tgt_mods)):
        paths = [p for p in alg.basis if alg.target(p) == s.vertex]
        for p in paths:
            d = alg.path_degree(p) + s.shift
            tgt_offs.setdefault(d, []).append((b_idx, p))
    for d in tgt_offs:
        tgt_offs[d].sort(key=lambda t: (t[0], t[1].word()))
    for j, s in enumerate(src_summands):
        d = s.shift
        col = _summand_generator_column(src_summands, j, alg)
        img = [f.mat(d).data[r][col] for r in range(f.target.dim(d))] \
            if f.mats.get(d) is not None else [Fraction(0)] * f.target.dim(d)
        for (b_idx, p), x in zip(tgt_offs.get(d, []), img):
            if x != 0:
                out.entries[b_idx][j] = out.entries[b_idx][j] + alg.element({p: x})
    return out


def _summand_generator_column(summands: tuple[Summand, ...], j: int,
                              alg: PathAlgebra) -> int:
    d = summands[j].shift
    off = 0
    for k in range(j):
        s = summands[k]
        off += sum(1 for p in alg.basis
                   if alg.target(p) == s.vertex and alg.path_degree(p) + s.shift == d)
    return off


def resolve_complex(Y: Complex, depth: int, name: str | None = None
                    ) -> tuple[ProjComplex, dict[int, ModuleHom]]:
    """Termwise-surjective quasi-isomorphism from a complex of projectives.

    Returns the resolution (descending to ``window_lo - depth``) and the
    augmentation maps from the realized terms onto the input terms.
    """
    alg = Y.algebra
    if Y.is_zero():
        return ProjComplex.zero_complex(alg), {}
    ylo, yhi = Y.window()
    terms: dict[int, tuple[Summand, ...]] = {}
    diffs: dict[int, AlgMatrix] = {}
    augment: dict[int, ModuleHom] = {}
    realized: dict[int, GradedModule] = {}
    dmats: dict[int, ModuleHom] = {}
    zero_mod = GradedModule.zero_module(alg)

    floor = ylo - depth
    for i in range(yhi, floor - 1, -1):
        Yi = Y.term(i)
        P_next = realized.get(i + 1, zero_mod)
        # cycles one degree up: kernel of the differential out of P^{i+1}
        if P_next.is_zero():
            Z, z_incl = zero_mod, None
        elif dmats.get(i + 1) is None:
            vec_all = {d: [_unit(P_next.dim(d), k) for k in range(P_next.dim(d))]
                       for d in P_next.degrees()}
            Z, z_incl = submodule_from_vectors(P_next, vec_all, name="Z")
        else:
            Z, z_incl = kernel_submodule(dmats[i + 1], name="Z")

        # W = {(y, z) : d_Y(y) = eps(z)} inside Y^i ⊕ Z; both constraints and
        # labels are degreewise exact linear algebra
        parts = [m for m in (Yi, Z) if not m.is_zero()]
        if not parts:
            continue
        amb = direct_sum(parts, alg)
        dY = Y.diff(i)
        eps_next = augment.get(i + 1)
        vectors: dict[int, list[list[Fraction]]] = {}
        for d in sorted(set(list(Yi.degrees()) + list(Z.degrees()))):
            ny, nz = Yi.dim(d), Z.dim(d)
            n_t = Y.term(i + 1).dim(d)

            def constraint(vec_y, vec_z):
                a = dY.mat(d).apply(vec_y) if ny else [Fraction(0)] * n_t
                if nz and z_incl is not None:
                    zc = z_incl.mat(d).apply(vec_z)
                    b = eps_next.mat(d).apply(zc)
                else:
                    b = [Fraction(0)] * n_t
                return [x - y for x, y in zip(a, b)]

            cols = [constraint(_unit(ny, k), _unit(nz, k - ny))
                    for k in range(ny + nz)]
            if not cols:
                continue
            if not cols[0]:
                vecs = [_unit(ny + nz, k) for k in range(ny + nz)]
            else:
                A = Matrix(len(cols[0]), len(cols),
                           [[cols[j][r] for j in range(len(cols))]
                            for r in range(len(cols[0]))])
                vecs = A.nullspace()
            split = []
            for v in vecs:
                for lab in sorted({_amb_label(Yi, Z, d, j)
                                   for j, x in enumerate(v) if x != 0}):
                    # label parts of a solution are solutions: the constraint
                    # preserves vertex labels
                    split.append([x if _amb_label(Yi, Z, d, j) == lab else Fraction(0)
                                  for j, x in enumerate(v)])
            if split:
                vectors[d] = split
        if not vectors:
            continue
        W, w_incl = submodule_from_vectors(amb, vectors, name="W")
        if W.is_zero():
            continue
        summands, epsW = projective_cover(W)
        terms[i] = summands
        realized[i] = direct_sum([projective(alg, s.vertex).shift(s.shift)
                                  for s in summands], alg)
        full = w_incl.compose(epsW)
        # split into the Y-component (augmentation) and Z-component (differential)
        y_mats: dict[int, Matrix] = {}
        z_mats: dict[int, Matrix] = {}
        for d in realized[i].degrees():
            m = full.mat(d)
            ny = Yi.dim(d)
            if ny:
                ym = m.submatrix(range(ny), range(m.ncols))
                if not ym.is_zero():
                    y_mats[d] = ym
            if m.nrows - ny > 0:
                zm = m.submatrix(range(ny, m.nrows), range(m.ncols))
                if not zm.is_zero():
                    z_mats[d] = zm
        augment[i] = ModuleHom(realized[i], Yi, 0, y_mats, "eps", validate=False)
        if not Z.is_zero():
            z_hom = ModuleHom(realized[i], Z, 0, z_mats, "toZ", validate=False)
            into_P = z_incl.compose(z_hom)
            dmats[i] = into_P
            diffs[i] = _hom_to_alg_matrix(into_P, summands, terms[i + 1], alg)

    pc = ProjComplex(alg, terms, diffs, None, name or f"res({Y.name})")
    if not pc.is_zero() and min(terms) <= floor + 1:
        tail = detect_tail(pc, LEFT_TAIL)
        if tail is None:
            raise WindowTooSmall(
                f"resolution of {Y.name} neither terminates nor stabilizes at depth {depth}")
        pc = ProjComplex(alg, terms, diffs, tail, pc.name, validate=True)
    return pc, augment


def _unit(n: int, k: int) -> list[Fraction]:
    v = [Fraction(0)] * n
    if 0 <= k < n:
        v[k] = Fraction(1)
    return v


def _amb_label(Yi: GradedModule, Z: GradedModule, d: int, j: int) -> str:
    ny = Yi.dim(d)
    if j < ny:
        return Yi.label(d, j)
    return Z.label(d, j - ny)
