"""Algebra presentations: a quiver plus a list of basic relations.

A relation is a basic element (all terms share one start and one end
vertex) whose every term has length at least 2.  Relation lists are
normalized by dropping zero relations, so an output of "no relations"
is the empty list rather than a list containing 0.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import PathPoly, Quiver
from .errors import PresentationError
from .mutation import destar_name, destar_quiver


@dataclass(frozen=True)
class Relation:
    name: str
    poly: PathPoly


@dataclass(frozen=True)
class AlgebraPresentation:
    """The quotient of a complete path algebra by the closed ideal
    generated by the relations.  Arrow degrees are forced to zero."""

    quiver: Quiver
    relations: tuple[Relation, ...]

    def __init__(self, quiver: Quiver, relations=()):
        object.__setattr__(self, "quiver", quiver.zero_degrees())
        kept: list[Relation] = []
        for rel in relations:
            if not isinstance(rel, Relation):
                rel = Relation(*rel)
            if not rel.poly:
                continue  # a zero relation is no relation
            for path in rel.poly.paths():
                if len(path) < 2:
                    raise PresentationError(
                        f"relation {rel.name!r} has the short term {path}")
                for n in path.arrows:
                    if not quiver.has_arrow(n):
                        raise PresentationError(
                            f"relation {rel.name!r} uses the unknown arrow {n!r}")
            if not rel.poly.is_basic():
                raise PresentationError(f"relation {rel.name!r} is not basic")
            kept.append(Relation(rel.name, monic(rel.poly)))
        object.__setattr__(self, "relations", tuple(kept))

    def relation_polys(self) -> list[PathPoly]:
        return [r.poly for r in self.relations]

    def relation(self, name: str) -> Relation:
        for r in self.relations:
            if r.name == name:
                return r
        raise PresentationError(f"no relation named {name!r}")


def monic(poly: PathPoly) -> PathPoly:
    """Scale so the canonically first term has coefficient 1."""
    if not poly:
        return poly
    first_path, first_coeff = poly.sorted_terms()[0]
    if first_coeff == 1:
        return poly
    return (1 / first_coeff) * poly


def opposite(p: AlgebraPresentation) -> AlgebraPresentation:
    """Reverse every arrow and every relation path.

    Left modules over the result are right modules over the input,
    which is what injective-dimension computations need.
    """
    op_quiver = Quiver(
        p.quiver.vertices,
        [(a.name, a.target, a.source, a.degree) for a in p.quiver.arrows])
    rels = []
    for r in p.relations:
        terms = []
        for path, coeff in r.poly.items():
            terms.append((op_quiver.path(tuple(reversed(path.arrows))), coeff))
        rels.append(Relation(r.name, PathPoly(terms)))
    return AlgebraPresentation(op_quiver, rels)


def destar_presentation(p: AlgebraPresentation) -> AlgebraPresentation:
    """Strip double stars from arrow and relation names, for round trips."""
    quiver = destar_quiver(p.quiver)
    rels = []
    for r in p.relations:
        terms = []
        for path, coeff in r.poly.items():
            terms.append((quiver.path([destar_name(n) for n in path.arrows]), coeff))
        rels.append(Relation(destar_name(r.name), PathPoly(terms)))
    return AlgebraPresentation(quiver, rels)


def presentations_equivalent(p: AlgebraPresentation, q: AlgebraPresentation) -> bool:
    """Same vertices, same arrows (names, endpoints), same multiset of
    monic relations; relation names are treated as metadata."""
    if tuple(p.quiver.vertices) != tuple(q.quiver.vertices):
        return False
    def arrow_set(pr):
        return {(a.name, a.source, a.target) for a in pr.quiver.arrows}
    if arrow_set(p) != arrow_set(q):
        return False
    left = sorted((monic(r.poly) for r in p.relations), key=str)
    right = sorted((monic(r.poly) for r in q.relations), key=str)
    return left == right
