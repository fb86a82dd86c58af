"""Premutation, graded premutation, and reduction of quivers with potential.

Premutation at a vertex ``k`` (which must not lie on a loop, though it
may lie on a 2-cycle) reverses every arrow incident to ``k`` (``a``
becomes ``a*``), adds one composite arrow ``[ba]`` for every pair
``u --b--> k --a--> v``, rewrites the potential by substituting each
through-``k`` composite ``ba`` with ``[ba]``, and adds the correction
term ``[ba] a* b*`` for every pair.

Reduction splits the result into a reduced part (no length-2 potential
terms) and a trivial part (only length-2 terms pairing distinct
arrows).  Mutation is premutation followed by taking the reduced part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import (DEFAULT_BOUND, Arrow, Path, PathPoly, Quiver, arrow_poly,
                   substitute_report)
from .errors import GradingError, MutationError, SplitError
from .potential import (GradedQP, canonicalize_potential, cyclic_derivative,
                        path_degree)

MAX_SWEEPS = 64

SIDES = ("left", "right", "ungraded")


@dataclass(frozen=True)
class MutationStep:
    vertex: str
    side: str = "left"

    def __post_init__(self):
        if self.side not in SIDES:
            raise MutationError(f"unknown mutation side {self.side!r}")


@dataclass(frozen=True)
class SplitResult:
    """Outcome of reduction: the arrows of ``reduced`` and ``trivial``
    partition the input's arrows, and ``trivial`` carries only the
    removed length-2 terms."""

    reduced: GradedQP
    trivial: GradedQP
    removed_arrows: frozenset[str]


def star_name(name: str) -> str:
    return name + "*"


def composite_name(b: str, a: str) -> str:
    return f"[{b}{a}]"


def destar_name(name: str) -> str:
    """Strip the double stars produced by mutating twice at one vertex."""
    while name.endswith("**"):
        name = name[:-2]
    return name


def premutate(g: GradedQP, k: str, side: str = "ungraded") -> GradedQP:
    """Premutation at ``k``; ``side`` selects the degree rule.

    ``ungraded`` zeroes every degree.  ``left`` keeps old degrees, sets
    ``d(a*) = -d(a)`` for arrows out of ``k``, ``d(b*) = -d(b) + l`` for
    arrows into ``k`` and ``d([ba]) = d(b) + d(a)``, where ``l`` is the
    homogeneity degree of the potential.  ``right`` swaps the two
    starred rules.
    """
    if side not in SIDES:
        raise MutationError(f"unknown mutation side {side!r}")
    quiver = g.quiver
    if k not in quiver.vertices:
        raise MutationError(f"unknown vertex {k!r}")
    incoming = [a for a in quiver.arrows_into(k) if a.source != a.target]
    outgoing = [a for a in quiver.arrows_from(k) if a.source != a.target]
    if any(a.source == k and a.target == k for a in quiver.arrows):
        raise MutationError(f"mutation is undefined at {k!r}: it lies on a loop")

    graded = side != "ungraded"
    level = g.degree(default=1) if graded else 0

    def kept_degree(a: Arrow) -> int:
        return a.degree if graded else 0

    def out_degree(a: Arrow) -> int:
        if not graded:
            return 0
        return -a.degree if side == "left" else -a.degree + level

    def in_degree(b: Arrow) -> int:
        if not graded:
            return 0
        return -b.degree + level if side == "left" else -b.degree

    new_arrows: list[Arrow] = []
    for a in quiver.arrows:
        if a.source != k and a.target != k:
            new_arrows.append(Arrow(a.name, a.source, a.target, kept_degree(a)))
    for a in outgoing:
        new_arrows.append(Arrow(star_name(a.name), a.target, k, out_degree(a)))
    for b in incoming:
        new_arrows.append(Arrow(star_name(b.name), k, b.source, in_degree(b)))
    for b in incoming:
        for a in outgoing:
            deg = b.degree + a.degree if graded else 0
            new_arrows.append(Arrow(composite_name(b.name, a.name),
                                    b.source, a.target, deg))
    names = [a.name for a in new_arrows]
    if len(set(names)) != len(names):
        raise MutationError(
            f"arrow name collision while mutating at {k!r}; rename the input arrows")
    new_quiver = Quiver(quiver.vertices, new_arrows)

    bracketed = _bracket_potential(g.potential, quiver, new_quiver, k)
    delta = PathPoly.zero()
    for b in incoming:
        for a in outgoing:
            cyc = new_quiver.path(
                [composite_name(b.name, a.name), star_name(a.name), star_name(b.name)])
            delta = delta + PathPoly.of(cyc)
    potential = canonicalize_potential(bracketed + delta, new_quiver)
    return GradedQP(new_quiver, potential,
                    declared_degree=level if graded else None)


def _bracket_potential(w: PathPoly, old: Quiver, new: Quiver, k: str) -> PathPoly:
    """Replace every through-``k`` composite ``ba`` in each cycle by ``[ba]``."""
    out = PathPoly.zero()
    for path, coeff in w.items():
        names = path.arrows
        starts = [old.arrow(n).source for n in names]
        if k not in starts and path.start != k:
            out = out + PathPoly.of(path, coeff)
            continue
        # rotate so the cycle does not start at k; every visit of k is
        # then interior and pairs two consecutive arrows
        offset = next((i for i, s in enumerate(starts) if s != k), None)
        if offset is None:
            raise MutationError(f"potential term {path} lives entirely on loops at {k!r}")
        rotated = names[offset:] + names[:offset]
        replaced: list[str] = []
        i = 0
        while i < len(rotated):
            n = rotated[i]
            if old.arrow(n).target == k:
                if i + 1 >= len(rotated):
                    raise MutationError(
                        f"cycle {path} passes through {k!r} at its base point unexpectedly")
                follower = rotated[i + 1]
                if len(rotated) == 2:
                    raise MutationError(
                        f"potential has the 2-cycle term {path} through {k!r}; "
                        f"reduce before mutating")
                replaced.append(composite_name(n, follower))
                i += 2
            else:
                replaced.append(n)
                i += 1
        out = out + PathPoly.of(new.path(replaced), coeff)
    return out


def graded_premutate(g: GradedQP, k: str, side: str) -> GradedQP:
    """Left or right premutation with the degree bookkeeping.

    The input must be homogeneous; the output is homogeneous of the
    same degree.
    """
    if side not in ("left", "right"):
        raise MutationError(f"graded premutation side must be left or right, got {side!r}")
    if g.potential:
        g.degree()  # raises GradingError when inhomogeneous
    return premutate(g, k, side=side)


def split(g: GradedQP, bound: int = DEFAULT_BOUND,
          max_sweeps: int = MAX_SWEEPS) -> SplitResult:
    """Split into reduced and trivial parts by eliminating length-2 terms.

    Terms are processed in canonical order.  For a term ``c * a b`` the
    cross occurrences of ``a`` and ``b`` are removed by the
    substitutions ``b -> b - (1/c) * (d_a W - c b)`` and
    ``a -> a - (1/c) * (d_b W - c a)``, iterated to a fixpoint under the
    truncation bound; the pair then moves to the trivial part.  The
    substitutions are degree preserving whenever the input grading is.
    """
    quiver = g.quiver
    work = g.potential
    removed: list[tuple[Path, Fraction]] = []
    removed_names: set[str] = set()
    graded = any(a.degree for a in quiver.arrows) or g.declared_degree is not None

    while True:
        short = [(p, c) for p, c in work.sorted_terms() if len(p) == 2]
        if not short:
            break
        path0, lam = short[0]
        aname, bname = path0.arrows
        if aname == bname:
            # a squared loop; only a fully isolated one can be set aside
            other = any(aname in p.arrows for p in work.paths() if p != path0)
            if other:
                raise SplitError(
                    f"term {path0} pairs an arrow with itself and is entangled; "
                    f"eliminating it needs a field extension")
            work = work + PathPoly.of(path0, -lam)
            removed.append((path0, lam))
            removed_names.add(aname)
            continue

        sweeps = 0
        while True:
            sweeps += 1
            if sweeps > max_sweeps:
                raise SplitError(
                    f"reduction of the term {path0} did not reach a fixpoint "
                    f"within {max_sweeps} sweeps")
            lam = work.coefficient(path0)
            if not lam:
                raise SplitError(f"term {path0} vanished during reduction")
            cross_a = cyclic_derivative(work, aname, quiver) \
                - lam * arrow_poly(quiver, bname)
            if cross_a:
                value = arrow_poly(quiver, bname) - (1 / lam) * cross_a
                _check_split_substitution(quiver, bname, value, graded)
                work, _ = substitute_report(work, {bname: value}, quiver, bound)
                work = canonicalize_potential(work, quiver)
                continue
            cross_b = cyclic_derivative(work, bname, quiver) \
                - lam * arrow_poly(quiver, aname)
            if cross_b:
                value = arrow_poly(quiver, aname) - (1 / lam) * cross_b
                _check_split_substitution(quiver, aname, value, graded)
                work, _ = substitute_report(work, {aname: value}, quiver, bound)
                work = canonicalize_potential(work, quiver)
                continue
            break

        lam = work.coefficient(path0)
        work = work + PathPoly.of(path0, -lam)
        if work.contains_arrow(aname) or work.contains_arrow(bname):
            raise SplitError(
                f"arrows of the trivial pair {path0} still occur after reduction")
        removed.append((path0, lam))
        removed_names.update((aname, bname))

    reduced_quiver = quiver.without_arrows(removed_names)
    trivial_quiver = Quiver(
        quiver.vertices, [a for a in quiver.arrows if a.name in removed_names])
    trivial_poly = PathPoly(removed)
    reduced = GradedQP(reduced_quiver, work, declared_degree=g.declared_degree)
    trivial = GradedQP(trivial_quiver, trivial_poly,
                       declared_degree=g.declared_degree if trivial_poly else None)
    return SplitResult(reduced, trivial, frozenset(removed_names))


def _check_split_substitution(quiver: Quiver, name: str, value: PathPoly,
                              graded: bool) -> None:
    if not graded:
        return
    want = quiver.arrow(name).degree
    for p in value.paths():
        if path_degree(p, quiver) != want:
            raise SplitError(
                f"reduction would replace {name!r} (degree {want}) by the "
                f"inhomogeneous value {value}")


def mutate(g: GradedQP, step: MutationStep, bound: int = DEFAULT_BOUND) -> GradedQP:
    """Premutate and take the reduced part."""
    if step.side == "ungraded":
        pre = premutate(g, step.vertex, side="ungraded")
    else:
        pre = graded_premutate(g, step.vertex, step.side)
    return split(pre, bound).reduced


def destar_quiver(q: Quiver) -> Quiver:
    renames = {a.name: destar_name(a.name) for a in q.arrows}
    if len(set(renames.values())) != len(renames):
        raise MutationError("stripping double stars would collide arrow names")
    return Quiver(q.vertices,
                  [Arrow(renames[a.name], a.source, a.target, a.degree) for a in q.arrows])


def destar(g: GradedQP) -> GradedQP:
    """Rename ``x**`` arrows back to ``x`` for round-trip comparisons."""
    quiver = destar_quiver(g.quiver)
    terms = []
    for path, coeff in g.potential.items():
        names = [destar_name(n) for n in path.arrows]
        terms.append((quiver.path(names), coeff))
    return GradedQP(quiver, PathPoly(terms), declared_degree=g.declared_degree)
