"""Cuts of a potential, cut-induced gradings, truncated Jacobian algebras,
and the construction of a graded QP from an algebra presentation."""

from __future__ import annotations

from dataclasses import dataclass

from .core import PathPoly, Quiver
from .errors import CutError, GradingError, PresentationError
from .potential import GradedQP, cyclic_derivative, homogeneity_degree
from .presentation import AlgebraPresentation, Relation


@dataclass
class CutReport:
    """Per-term counts of cut arrows; a valid cut hits every term once."""

    valid: bool
    term_counts: list[tuple[str, int]]
    unknown_arrows: list[str]

    def offending_terms(self) -> list[str]:
        return [t for t, c in self.term_counts if c != 1]


def validate_cut(g: GradedQP, cut: frozenset[str] | set[str]) -> CutReport:
    """Count, with multiplicity, the cut arrows in every potential term."""
    unknown = sorted(n for n in cut if not g.quiver.has_arrow(n))
    counts = []
    valid = not unknown
    for path, _ in g.potential.sorted_terms():
        c = sum(1 for n in path.arrows if n in cut)
        counts.append((str(path), c))
        if c != 1:
            valid = False
    return CutReport(valid, counts, unknown)


def grading_from_cut(g: GradedQP, cut: frozenset[str] | set[str]) -> GradedQP:
    """Degree 1 on cut arrows, 0 elsewhere; declares degree 1."""
    report = validate_cut(g, cut)
    if report.unknown_arrows:
        raise CutError(f"cut names unknown arrows: {report.unknown_arrows}")
    if not report.valid:
        raise CutError(
            f"not a cut: terms {report.offending_terms()} are not hit exactly once")
    degrees = {a.name: (1 if a.name in cut else 0) for a in g.quiver.arrows}
    return GradedQP(g.quiver.with_degrees(degrees), g.potential, declared_degree=1)


def cut_from_grading(g: GradedQP) -> frozenset[str]:
    """Recover the cut from a {0,1}-grading with a degree-1 potential."""
    for a in g.quiver.arrows:
        if a.degree not in (0, 1):
            raise GradingError(
                f"arrow {a.name!r} has degree {a.degree}, so no cut induces this grading")
    if g.potential and homogeneity_degree(g.potential, g.quiver) != 1:
        raise GradingError("potential is not homogeneous of degree 1")
    return frozenset(a.name for a in g.quiver.arrows if a.degree == 1)


def truncated_jacobian(g: GradedQP, cut: frozenset[str] | set[str]) -> AlgebraPresentation:
    """The algebra on the quiver minus the cut, with one relation per cut
    arrow given by its cyclic derivative (zero derivatives are dropped,
    relation names inherit the cut arrow names)."""
    report = validate_cut(g, cut)
    if report.unknown_arrows:
        raise CutError(f"cut names unknown arrows: {report.unknown_arrows}")
    if not report.valid:
        raise CutError(
            f"not a cut: terms {report.offending_terms()} are not hit exactly once")
    sub = g.quiver.without_arrows(cut)
    relations = []
    for a in g.quiver.arrows:
        if a.name not in cut:
            continue
        poly = cyclic_derivative(g.potential, a.name, g.quiver)
        if not poly:
            continue
        # derivatives of a cut contain no cut arrows, so they live on the subquiver
        terms = [(sub.path(p.arrows, start=p.start), c) for p, c in poly.items()]
        relations.append(Relation(a.name, PathPoly(terms)))
    return AlgebraPresentation(sub, relations)


def rho_arrow_name(p: AlgebraPresentation, rel: Relation) -> str:
    if len(p.relations) == 1 and rel.name == "1":
        return "rho"
    return f"rho_{rel.name}"


def qp_from_algebra(p: AlgebraPresentation) -> tuple[GradedQP, frozenset[str]]:
    """Adjoin one degree-1 arrow per relation, running from the relation's
    end to its start, and take the potential sum of (new arrow) * relation.
    The new arrows form a cut."""
    arrows = [a for a in p.quiver.arrows]
    new_names = []
    for rel in p.relations:
        name = rho_arrow_name(p, rel)
        if p.quiver.has_arrow(name) or name in new_names:
            raise PresentationError(
                f"cannot adjoin arrow {name!r} for relation {rel.name!r}: name taken")
        new_names.append(name)
        arrows.append((name, rel.poly.target(), rel.poly.source(), 1))
    quiver = Quiver(p.quiver.vertices, arrows)
    w = PathPoly.zero()
    for rel, name in zip(p.relations, new_names):
        for path, coeff in rel.poly.items():
            w = w + PathPoly.of(quiver.path((name,) + path.arrows), coeff)
    return GradedQP(quiver, w, declared_degree=1), frozenset(new_names)


def classify_vertex(g: GradedQP, cut: frozenset[str] | set[str], k: str) -> str:
    """``strict_source`` when every arrow into ``k`` is in the cut and no
    arrow out of it is; dually ``strict_sink``; otherwise ``neither``."""
    incoming = g.quiver.arrows_into(k)
    outgoing = g.quiver.arrows_from(k)
    if not incoming and not outgoing:
        return "neither"
    if all(a.name in cut for a in incoming) and all(a.name not in cut for a in outgoing):
        return "strict_source"
    if all(a.name in cut for a in outgoing) and all(a.name not in cut for a in incoming):
        return "strict_sink"
    return "neither"
