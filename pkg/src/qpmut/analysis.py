"""Finite-dimensional linear algebra over algebra presentations.

Everything here is degree-by-degree dense linear algebra over exact
rationals: normal-form bases for the quotient algebra, projective
modules and their covers, minimal projective resolutions, global and
injective dimensions, relation minimality, and the algebraic-cut check.

The completed quotient is computed through a truncation bound.  The
ideal modulo paths longer than the bound is the span of all truncated
products (path) * (relation) * (path); rows are eliminated with the
lexicographically first (shortest) term of each element as pivot, so
reducible paths rewrite into longer ones, matching the adic topology.
Once some length carries no normal form the radical is nilpotent and
the results are exact; otherwise every report is flagged as truncated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import DEFAULT_BOUND, Path, PathPoly, Quiver
from .cuts import CutReport, truncated_jacobian, validate_cut
from .errors import AnalysisError, PresentationError, QPError
from .potential import GradedQP, cyclic_derivative, right_derivative
from .presentation import AlgebraPresentation, Relation, opposite
from .ratmat import (Mat, column_space_complement, express_in_columns,
                     nullspace, rref, solve_in_span)

DEFAULT_CAP = 4


class _PathEnumerator:
    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self._by_len: list[list[Path]] = [
            [quiver.trivial_path(v) for v in quiver.vertices]]

    def upto(self, length: int) -> list[list[Path]]:
        while len(self._by_len) <= length:
            prev = self._by_len[-1]
            nxt = []
            for p in prev:
                for a in self.quiver.arrows_from(p.end):
                    nxt.append(Path(p.start, p.arrows + (a.name,), a.target))
            self._by_len.append(nxt)
        return self._by_len[: length + 1]


@dataclass
class NormalFormBasis:
    """Normal forms of a degree-bounded algebra quotient.

    ``classes`` lists the irreducible paths; ``level`` is the first
    length with no normal form (the radical nilpotency index) when
    ``stabilized``, else ``bound + 1``.
    """

    quiver: Quiver
    bound: int
    stabilized: bool
    level: int
    classes: tuple[Path, ...]
    rewrites: dict[Path, PathPoly] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.classes)

    def classes_between(self, source: str, target: str) -> list[Path]:
        return [p for p in self.classes if p.start == source and p.end == target]

    def reduce_path(self, path: Path) -> PathPoly:
        if len(path) >= self.level:
            return PathPoly.zero()
        hit = self.rewrites.get(path)
        if hit is not None:
            return hit
        if len(path) > self.bound:
            return PathPoly.zero()
        return PathPoly.of(path)

    def reduce(self, poly: PathPoly) -> PathPoly:
        out = PathPoly.zero()
        for path, coeff in poly.items():
            out = out + coeff * self.reduce_path(path)
        return out


def basis(quiver: Quiver, relations, bound: int = DEFAULT_BOUND) -> NormalFormBasis:
    """Normal-form basis of the quotient by the closed ideal the relations
    generate, truncated at ``bound``.

    The ideal at each length is spanned by the products
    p * r * q with len(p) + min-length(r) + len(q) equal to that length.
    Rows are reduced against previous pivots and pivot on their first
    term in canonical order; pivots found at later stages always have
    longer leads, so the normal forms at a length are final once its
    stage completes, and an empty length stops the computation early.
    """
    if bound < 2:
        raise AnalysisError("basis bound must be >= 2")
    rels: list[PathPoly] = [r for r in (relations or []) if r]
    for r in rels:
        if r.min_length() < 1:
            raise AnalysisError("relations must lie in the radical (length >= 1 terms)")
    pivots: dict[Path, PathPoly] = {}

    def reduce_row(poly: PathPoly) -> PathPoly:
        out = PathPoly.zero()
        for p, c in poly.items():
            hit = pivots.get(p)
            out = out + (c * hit if hit is not None else PathPoly.of(p, c))
        return out

    def add_row(poly: PathPoly) -> None:
        poly = reduce_row(poly)
        if not poly:
            return
        lead, lc = poly.sorted_terms()[0]
        rest = (-1 / lc) * (poly + PathPoly.of(lead, -lc))
        for q, r in list(pivots.items()):
            c = r.coefficient(lead)
            if c:
                pivots[q] = r + PathPoly.of(lead, -c) + c * rest
        pivots[lead] = rest

    enum = _PathEnumerator(quiver)
    classes: list[Path] = []
    stabilized = False
    level = bound + 1
    for ell in range(bound + 1):
        layers = enum.upto(ell)
        for r in rels:
            ml = r.min_length()
            if ml > ell:
                continue
            src, tgt = r.source(), r.target()
            for lp in range(ell - ml + 1):
                lq = ell - ml - lp
                lefts = [p for p in layers[lp] if p.end == src]
                rights = [q for q in layers[lq] if q.start == tgt]
                for p in lefts:
                    left = PathPoly.of(p)
                    for q in rights:
                        row = (left * r * PathPoly.of(q)).truncated(bound)
                        add_row(row)
        layer_normal = sorted(
            (p for p in layers[ell] if p not in pivots),
            key=lambda p: (p.arrows, p.start))
        if not layer_normal:
            stabilized = True
            level = ell
            break
        classes.extend(layer_normal)
    # once stabilized, paths at or past the level are zero in the algebra;
    # scrub them from the stored rewrites so reductions stay inside classes
    if stabilized:
        cleaned = {}
        for p, r in pivots.items():
            if len(p) >= level:
                continue
            cleaned[p] = r.truncated(level - 1)
        pivots = cleaned
    return NormalFormBasis(quiver, bound, stabilized, level, tuple(classes), pivots)


def basis_of(p: AlgebraPresentation, bound: int = DEFAULT_BOUND) -> NormalFormBasis:
    return basis(p.quiver, p.relation_polys(), bound)


def jacobian_relations(g: GradedQP) -> list[PathPoly]:
    """Cyclic derivatives by every arrow (the full Jacobian ideal's
    generators, not the truncated ones)."""
    return [d for a in g.quiver.arrows
            if (d := cyclic_derivative(g.potential, a.name, g.quiver))]


def jacobian_dimension(g: GradedQP, bound: int = DEFAULT_BOUND) -> tuple[int, bool]:
    """Degree-bounded dimension of the Jacobian algebra of a QP and
    whether the computation stabilized (is exact)."""
    nfb = basis(g.quiver, jacobian_relations(g), bound)
    return nfb.dimension, nfb.stabilized


# ---------------------------------------------------------------------------
# finite-dimensional modules


@dataclass
class FDModule:
    """A module given by one vector space per vertex and one matrix per
    arrow; the matrix of ``a`` maps the component at its target into the
    component at its source (left modules, paths composing left to right)."""

    quiver: Quiver
    dims: dict[str, int]
    action: dict[str, Mat]

    def dim(self, v: str) -> int:
        return self.dims.get(v, 0)

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def path_action(self, path: Path) -> Mat:
        out = Mat.identity(self.dim(path.start))
        for name in path.arrows:
            out = out.mul(self.action[name])
        return out

    def poly_action(self, poly: PathPoly) -> Mat:
        src = poly.source()
        tgt = poly.target()
        out = Mat.zeros(self.dim(src), self.dim(tgt))
        for path, coeff in poly.items():
            pa = self.path_action(path)
            for i in range(out.m):
                for j in range(out.n):
                    out.a[i][j] += coeff * pa.a[i][j]
        return out

    def satisfies(self, relations) -> bool:
        return all(self.poly_action(r).is_zero() for r in relations if r)


@dataclass
class ModuleHom:
    """A morphism, one matrix per vertex component (domain -> codomain)."""

    domain: FDModule
    codomain: FDModule
    blocks: dict[str, Mat]

    def commutes(self) -> bool:
        q = self.domain.quiver
        for a in q.arrows:
            left = self.blocks[a.source].mul(self.domain.action[a.name])
            right = self.codomain.action[a.name].mul(self.blocks[a.target])
            if left != right:
                return False
        return True


def simple_module(quiver: Quiver, vertex: str) -> FDModule:
    dims = {v: (1 if v == vertex else 0) for v in quiver.vertices}
    action = {a.name: Mat.zeros(dims[a.source], dims[a.target])
              for a in quiver.arrows}
    return FDModule(quiver, dims, action)


@dataclass
class ProjectiveModule:
    """The projective at a vertex, with its normal-form path basis."""

    module: FDModule
    vertex: str
    basis_at: dict[str, list[Path]]


def projective_module(nfb: NormalFormBasis, vertex: str) -> ProjectiveModule:
    """P_v has basis the normal forms ending at ``vertex``, graded by their
    start; an arrow acts by composing on the left and reducing."""
    quiver = nfb.quiver
    basis_at = {v: nfb.classes_between(v, vertex) for v in quiver.vertices}
    dims = {v: len(basis_at[v]) for v in quiver.vertices}
    index = {v: {p: i for i, p in enumerate(basis_at[v])} for v in quiver.vertices}
    action = {}
    for a in quiver.arrows:
        mat = Mat.zeros(dims[a.source], dims[a.target])
        for j, p in enumerate(basis_at[a.target]):
            composed = Path(a.source, (a.name,) + p.arrows, p.end)
            for np_, coeff in nfb.reduce_path(composed).items():
                mat.a[index[a.source][np_]][j] = coeff
        action[a.name] = mat
    return ProjectiveModule(FDModule(quiver, dims, action), vertex, basis_at)


def radical_submodule_matrix(mod: FDModule, v: str) -> Mat:
    """Columns spanning the radical part of the component at ``v``."""
    cols: list[list[Fraction]] = []
    for a in mod.quiver.arrows_from(v):
        act = mod.action[a.name]
        cols.extend(act.column(j) for j in range(act.n))
    return Mat.from_columns(mod.dim(v), cols)


def top_generator_indices(mod: FDModule) -> dict[str, list[int]]:
    """Standard-basis indices lifting a basis of the top, per vertex."""
    out = {}
    for v in mod.quiver.vertices:
        if mod.dim(v) == 0:
            out[v] = []
            continue
        out[v] = column_space_complement(radical_submodule_matrix(mod, v))
    return out


@dataclass
class ProjectiveSum:
    """A direct sum of projectives with summand bookkeeping: the component
    basis at a vertex runs through the summands in order."""

    module: FDModule
    summands: list[str]
    parts: list[ProjectiveModule]


def projective_sum(nfb: NormalFormBasis, vertices: list[str],
                   cache: dict[str, ProjectiveModule] | None = None) -> ProjectiveSum:
    cache = cache if cache is not None else {}
    parts = []
    for v in vertices:
        if v not in cache:
            cache[v] = projective_module(nfb, v)
        parts.append(cache[v])
    quiver = nfb.quiver
    dims = {v: sum(p.module.dim(v) for p in parts) for v in quiver.vertices}
    action = {}
    for a in quiver.arrows:
        mat = Mat.zeros(dims[a.source], dims[a.target])
        ro = co = 0
        for p in parts:
            block = p.module.action[a.name]
            for i in range(block.m):
                for j in range(block.n):
                    mat.a[ro + i][co + j] = block.a[i][j]
            ro += block.m
            co += block.n
        action[a.name] = mat
    return ProjectiveSum(FDModule(quiver, dims, action), list(vertices), parts)


def projective_cover(nfb: NormalFormBasis, mod: FDModule,
                     cache: dict[str, ProjectiveModule] | None = None
                     ) -> tuple[ProjectiveSum, ModuleHom]:
    """Minimal projective cover, built from lifts of a basis of the top."""
    tops = top_generator_indices(mod)
    gens: list[tuple[str, int]] = []
    for v in mod.quiver.vertices:
        for idx in tops[v]:
            gens.append((v, idx))
    cover = projective_sum(nfb, [v for v, _ in gens], cache)
    blocks = {}
    for u in mod.quiver.vertices:
        cols: list[list[Fraction]] = []
        for t, (v, idx) in enumerate(gens):
            part = cover.parts[t]
            for p in part.basis_at[u]:
                act = mod.path_action(p)  # component at v -> component at u
                cols.append(act.column(idx))
        blocks[u] = Mat.from_columns(mod.dim(u), cols)
    return cover, ModuleHom(cover.module, mod, blocks)


def kernel_of_hom(hom: ModuleHom) -> tuple[FDModule, ModuleHom]:
    quiver = hom.domain.quiver
    bases = {}
    dims = {}
    for v in quiver.vertices:
        null = nullspace(hom.blocks[v])
        bases[v] = Mat.from_columns(hom.domain.dim(v), null)
        dims[v] = len(null)
    action = {}
    for a in quiver.arrows:
        moved = hom.domain.action[a.name].mul(bases[a.target])
        action[a.name] = solve_in_span(bases[a.source], moved)
    kernel = FDModule(quiver, dims, action)
    return kernel, ModuleHom(kernel, hom.domain, bases)


@dataclass
class Resolution:
    """A minimal projective resolution, truncated at a cap.

    ``steps[d]`` gives the multiplicity of each indecomposable projective
    in the d-th term; ``syzygy_dims[d]`` the dimension vector of the
    (d+1)-st syzygy.  ``pd`` is the projective dimension, or the string
    ``">cap"`` when the resolution did not terminate within the cap.
    """

    steps: list[dict[str, int]]
    syzygy_dims: list[dict[str, int]]
    pd: int | str


def resolve(nfb: NormalFormBasis, module: FDModule, cap: int = DEFAULT_CAP) -> Resolution:
    cache: dict[str, ProjectiveModule] = {}
    steps: list[dict[str, int]] = []
    syz: list[dict[str, int]] = []
    cur = module
    for d in range(cap + 1):
        if cur.total_dim() == 0:
            return Resolution(steps, syz, d - 1)
        cover, hom = projective_cover(nfb, cur, cache)
        mults: dict[str, int] = {}
        for v in cover.summands:
            mults[v] = mults.get(v, 0) + 1
        steps.append(mults)
        cur, _ = kernel_of_hom(hom)
        syz.append(dict(cur.dims))
    pd: int | str = cap if cur.total_dim() == 0 else f">{cap}"
    return Resolution(steps, syz, pd)


def projective_resolution(p: AlgebraPresentation, module: FDModule,
                          cap: int = DEFAULT_CAP,
                          bound: int = DEFAULT_BOUND) -> Resolution:
    nfb = basis_of(p, bound)
    if not nfb.stabilized:
        raise AnalysisError(
            f"algebra did not stabilize at bound {bound}; resolutions would be inexact")
    return resolve(nfb, module, cap)


def global_dimension(p: AlgebraPresentation, cap: int = DEFAULT_CAP,
                     bound: int = DEFAULT_BOUND) -> int | str:
    """Maximum projective dimension over the simple modules."""
    nfb = basis_of(p, bound)
    if not nfb.stabilized:
        raise AnalysisError(
            f"algebra did not stabilize at bound {bound}; it may be infinite dimensional")
    worst = 0
    for v in p.quiver.vertices:
        res = resolve(nfb, simple_module(p.quiver, v), cap)
        if isinstance(res.pd, str):
            return res.pd
        worst = max(worst, res.pd)
    return worst


def dual_of_projective(p: AlgebraPresentation, k: str,
                       bound: int = DEFAULT_BOUND
                       ) -> tuple[AlgebraPresentation, FDModule]:
    """The linear dual of P_k as a module over the opposite presentation."""
    nfb = basis_of(p, bound)
    if not nfb.stabilized:
        raise AnalysisError(
            f"algebra did not stabilize at bound {bound}; duals would be inexact")
    pk = projective_module(nfb, k)
    op = opposite(p)
    dims = dict(pk.module.dims)
    action = {a.name: pk.module.action[a.name].transpose()
              for a in p.quiver.arrows}
    dual = FDModule(op.quiver, dims, action)
    return op, dual


def injective_dimension_of_projective(p: AlgebraPresentation, k: str,
                                      cap: int = DEFAULT_CAP,
                                      bound: int = DEFAULT_BOUND) -> int | str:
    """id of P_k, computed as the projective dimension of its dual over
    the opposite presentation; 0 means P_k is injective."""
    if k not in p.quiver.vertices:
        raise QPError(f"unknown vertex {k!r}")
    op, dual = dual_of_projective(p, k, bound)
    op_nfb = basis_of(op, bound)
    if not op_nfb.stabilized:
        raise AnalysisError(
            f"opposite algebra did not stabilize at bound {bound}")
    return resolve(op_nfb, dual, cap).pd


# ---------------------------------------------------------------------------
# the standard two-step complex for a vertex, and relation minimality


@dataclass
class SimplePresentation:
    """The complex  (sum of P over relations into i) -> (sum of P over
    arrows into i) -> (radical part of P_i) -> 0."""

    vertex: str
    relations: list[Relation]
    arrows_in: list[str]
    left: ProjectiveSum
    middle: ProjectiveSum
    right: FDModule
    map_left: ModuleHom
    map_right: ModuleHom


def _radical_of_projective(nfb: NormalFormBasis, vertex: str) -> tuple[FDModule, dict[str, list[Path]]]:
    quiver = nfb.quiver
    basis_at = {v: [p for p in nfb.classes_between(v, vertex) if len(p) >= 1]
                for v in quiver.vertices}
    dims = {v: len(basis_at[v]) for v in quiver.vertices}
    index = {v: {p: i for i, p in enumerate(basis_at[v])} for v in quiver.vertices}
    action = {}
    for a in quiver.arrows:
        mat = Mat.zeros(dims[a.source], dims[a.target])
        for j, p in enumerate(basis_at[a.target]):
            composed = Path(a.source, (a.name,) + p.arrows, p.end)
            for np_, coeff in nfb.reduce_path(composed).items():
                mat.a[index[a.source][np_]][j] = coeff
        action[a.name] = mat
    return FDModule(quiver, dims, action), basis_at


def _right_multiplication_columns(nfb: NormalFormBasis, sum_mod: ProjectiveSum,
                                  factors: list[PathPoly],
                                  target_basis: dict[str, list[Path]],
                                  target_dims: dict[str, int]) -> dict[str, Mat]:
    """Blocks of the hom sending the generator of summand t to factors[t],
    where factors[t] is basic from the summand vertex to the target data."""
    quiver = nfb.quiver
    index = {v: {p: i for i, p in enumerate(target_basis[v])}
             for v in quiver.vertices}
    blocks = {}
    for u in quiver.vertices:
        cols: list[list[Fraction]] = []
        for t, part in enumerate(sum_mod.parts):
            factor = factors[t]
            for p in part.basis_at[u]:
                col = [Fraction(0)] * target_dims[u]
                for fp, fc in factor.items():
                    prod = Path(p.start, p.arrows + fp.arrows, fp.end)
                    for np_, coeff in nfb.reduce_path(prod).items():
                        col[index[u][np_]] += fc * coeff
                cols.append(col)
        blocks[u] = Mat.from_columns(target_dims[u], cols)
    return blocks


def simple_presentation(p: AlgebraPresentation, vertex: str,
                        bound: int = DEFAULT_BOUND) -> SimplePresentation:
    """Realize the two-step complex over the algebra as explicit modules
    and morphisms; its exactness characterizes the relations generating
    all syzygies of the arrows into the vertex."""
    nfb = basis_of(p, bound)
    if not nfb.stabilized:
        raise AnalysisError(f"algebra did not stabilize at bound {bound}")
    return _simple_presentation(p, nfb, vertex)


def _simple_presentation(p: AlgebraPresentation, nfb: NormalFormBasis,
                         vertex: str) -> SimplePresentation:
    quiver = p.quiver
    rels = [r for r in p.relations if r.poly.target() == vertex]
    arrows_in = [a.name for a in quiver.arrows_into(vertex)]
    cache: dict[str, ProjectiveModule] = {}
    left = projective_sum(nfb, [r.poly.source() for r in rels], cache)
    middle = projective_sum(nfb, [quiver.arrow(b).source for b in arrows_in], cache)
    right, right_basis = _radical_of_projective(nfb, vertex)

    # middle -> radical: right multiplication by each incoming arrow
    mid_factors = [PathPoly.of(quiver.path([b])) for b in arrows_in]
    right_blocks = _right_multiplication_columns(
        nfb, middle, mid_factors, right_basis, right.dims)
    map_right = ModuleHom(middle.module, right, right_blocks)

    # left -> middle: the block row of right derivatives of each relation
    mid_basis = {v: [] for v in quiver.vertices}
    offsets: list[dict[str, int]] = []
    for t, part in enumerate(middle.parts):
        offsets.append({v: len(mid_basis[v]) for v in quiver.vertices})
        for v in quiver.vertices:
            mid_basis[v].extend(part.basis_at[v])
    left_blocks = {}
    for u in quiver.vertices:
        cols: list[list[Fraction]] = []
        for t, part in enumerate(left.parts):
            rel = rels[t]
            for ppath in part.basis_at[u]:
                col = [Fraction(0)] * middle.module.dim(u)
                for bi, bname in enumerate(arrows_in):
                    der = right_derivative(rel.poly, bname, quiver)
                    if not der:
                        continue
                    base = offsets[bi][u]
                    target_part = middle.parts[bi]
                    tindex = {q: i for i, q in enumerate(target_part.basis_at[u])}
                    for fp, fc in der.items():
                        prod = Path(ppath.start, ppath.arrows + fp.arrows, fp.end)
                        for np_, coeff in nfb.reduce_path(prod).items():
                            col[base + tindex[np_]] += fc * coeff
                cols.append(col)
        left_blocks[u] = Mat.from_columns(middle.module.dim(u), cols)
    map_left = ModuleHom(left.module, middle.module, left_blocks)
    return SimplePresentation(vertex, rels, arrows_in, left, middle, right,
                              map_left, map_right)


@dataclass
class MinimalityReport:
    minimal: bool
    generating: bool
    redundant: list[str]
    stabilized: bool
    per_vertex: dict[str, str]

    @property
    def exact(self) -> bool:
        return self.minimal and self.generating

    def summary(self) -> str:
        lines = []
        verdict = "minimal" if self.minimal else "NOT minimal"
        if not self.generating:
            verdict += ", and the relations do not generate all syzygies"
        lines.append(f"relations are {verdict}")
        if self.redundant:
            lines.append(f"redundant: {', '.join(self.redundant)}")
        if not self.stabilized:
            lines.append("warning: basis did not stabilize; verdict is conditional "
                         "on the truncation bound")
        for v, msg in sorted(self.per_vertex.items()):
            lines.append(f"vertex {v}: {msg}")
        return "\n".join(lines)


def relations_minimal(p: AlgebraPresentation,
                      bound: int = DEFAULT_BOUND) -> MinimalityReport:
    """Certify minimality through the per-vertex two-step complexes.

    At each vertex the kernel of (sum of P over incoming arrows) ->
    (radical of P_i) is computed; the relation rows must project to a
    basis of its top.  Surjectivity of that projection is exactness of
    the complex, injectivity is minimality, and a dependent row names a
    redundant relation.
    """
    nfb = basis_of(p, bound)
    redundant: list[str] = []
    generating = True
    per_vertex: dict[str, str] = {}
    for v in p.quiver.vertices:
        rels = [r for r in p.relations if r.poly.target() == v]
        arrows_in = p.quiver.arrows_into(v)
        if not rels and not arrows_in:
            continue
        sp = _simple_presentation(p, nfb, v)
        kernel, incl = kernel_of_hom(sp.map_right)
        top_dim = sum(len(top_generator_indices(kernel)[u])
                      for u in p.quiver.vertices if kernel.dim(u))
        if not rels:
            if top_dim:
                generating = False
                per_vertex[v] = (f"kernel top has dimension {top_dim} "
                                 f"but no relations end here")
            continue
        # project each relation row into the top of the kernel
        tops: dict[str, tuple[Mat, list[int], Mat]] = {}
        for u in p.quiver.vertices:
            if kernel.dim(u) == 0:
                continue
            rad = radical_submodule_matrix(kernel, u)
            rad_reduced, rad_pivots = rref(rad)
            rad_basis = Mat.from_columns(kernel.dim(u), [rad.column(j) for j in rad_pivots])
            comp = column_space_complement(rad_basis)
            full = rad_basis.hstack(Mat.from_columns(
                kernel.dim(u), [[Fraction(1) if i == c else Fraction(0)
                                 for i in range(kernel.dim(u))] for c in comp]))
            tops[u] = (rad_basis, comp, full)
        rows_by_vertex: dict[str, list[tuple[str, list[Fraction]]]] = {}
        for t, rel in enumerate(sp.relations):
            u = rel.poly.source()
            # the row's value at the generator: block vector of right derivatives
            vec = [Fraction(0)] * sp.middle.module.dim(u)
            gen_index = sum(part.module.dim(u) for part in sp.left.parts[:t])
            col = sp.map_left.blocks[u].column(gen_index)
            vec = col
            coords = express_in_columns(incl.blocks[u], vec)
            if coords is None:
                raise AnalysisError(
                    f"relation {rel.name!r} does not land in the kernel at {v!r}")
            if u not in tops:
                redundant.append(rel.name)
                continue
            rad_basis, comp, full = tops[u]
            sol = express_in_columns(full, coords)
            top_part = sol[rad_basis.n:]
            rows_by_vertex.setdefault(u, []).append((rel.name, top_part))
        found_rank = 0
        for u, rows in rows_by_vertex.items():
            work: list[list[Fraction]] = []
            for name, row in rows:
                cur = list(row)
                for w in work:
                    lead = next((j for j, x in enumerate(w) if x), None)
                    if lead is not None and cur[lead]:
                        f = cur[lead] / w[lead]
                        cur = [x - f * y for x, y in zip(cur, w)]
                if any(cur):
                    work.append(cur)
                    found_rank += 1
                else:
                    redundant.append(name)
        if found_rank < top_dim:
            generating = False
            per_vertex[v] = (f"relation rows span {found_rank} of the "
                             f"{top_dim}-dimensional kernel top")
        else:
            per_vertex[v] = f"exact ({len(rels)} relation(s), kernel top {top_dim})"
    return MinimalityReport(
        minimal=not redundant and generating,
        generating=generating,
        redundant=redundant,
        stabilized=nfb.stabilized,
        per_vertex=per_vertex,
    )


# ---------------------------------------------------------------------------
# the algebraic-cut predicate


@dataclass
class AlgebraicCutReport:
    cut: CutReport
    reduced: bool
    stabilized: bool
    dimension: int | None
    gldim: int | str | None
    minimality: MinimalityReport | None
    failure: str | None = None

    @property
    def algebraic(self) -> bool:
        return (self.cut.valid and self.stabilized
                and isinstance(self.gldim, int) and self.gldim <= 2
                and self.minimality is not None and self.minimality.minimal)

    @property
    def reduced_with_algebraic_cut(self) -> bool:
        return self.algebraic and self.reduced

    def summary(self) -> str:
        lines = [
            f"cut valid: {self.cut.valid}",
            f"reduced (no length-2 terms): {self.reduced}",
            f"finite dimensional (stabilized): {self.stabilized}"
            + (f", dimension {self.dimension}" if self.dimension is not None else ""),
            f"global dimension: {self.gldim}",
        ]
        if self.minimality is not None:
            lines.append("relations minimal: "
                         f"{self.minimality.minimal}")
            if not self.minimality.stabilized:
                lines.append("  (conditional: truncation did not stabilize)")
        if self.failure:
            lines.append(f"failure: {self.failure}")
        lines.append(f"algebraic cut: {self.algebraic}")
        lines.append(f"reduced QP with algebraic cut: {self.reduced_with_algebraic_cut}")
        return "\n".join(lines)


def check_algebraic_cut(g: GradedQP, cut: frozenset[str] | set[str],
                        bound: int = DEFAULT_BOUND,
                        cap: int = DEFAULT_CAP) -> AlgebraicCutReport:
    """Run the full battery: cut validity, reducedness, finite dimension
    of the truncated Jacobian algebra, global dimension at most two, and
    minimality of the derivative relations."""
    cut_report = validate_cut(g, cut)
    reduced = g.is_reduced()
    if not cut_report.valid:
        return AlgebraicCutReport(cut_report, reduced, False, None, None, None,
                                  failure="invalid cut")
    try:
        pres = truncated_jacobian(g, cut)
    except (PresentationError, QPError) as exc:
        return AlgebraicCutReport(cut_report, reduced, False, None, None, None,
                                  failure=str(exc))
    nfb = basis_of(pres, bound)
    if not nfb.stabilized:
        return AlgebraicCutReport(cut_report, reduced, False, nfb.dimension,
                                  None, None,
                                  failure=f"did not stabilize at bound {bound}")
    gldim = global_dimension(pres, cap, bound)
    minimality = relations_minimal(pres, bound)
    return AlgebraicCutReport(cut_report, reduced, True, nfb.dimension,
                              gldim, minimality)
