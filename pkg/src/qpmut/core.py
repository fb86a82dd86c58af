"""Quivers, paths, and exact path-algebra arithmetic.

Conventions used throughout the package:

* Paths compose left to right: ``p * q`` traverses ``p`` first, so the
  product is defined when the end vertex of ``p`` equals the start
  vertex of ``q``.
* Coefficients are exact rationals (`fractions.Fraction`).
* Power-series elements of the complete path algebra are represented by
  finite linear combinations together with an explicit truncation bound
  supplied to the operations that can lengthen terms (substitution).
  The default bound is :data:`DEFAULT_BOUND`.

All values here are immutable; every operation is a pure function, so
values can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .errors import CompositionError, QPError, SubstitutionError

DEFAULT_BOUND = 12

Rational = Fraction | int


@dataclass(frozen=True)
class Arrow:
    """A named arrow with an optional integer degree (default 0)."""

    name: str
    source: str
    target: str
    degree: int = 0


@dataclass(frozen=True)
class Quiver:
    """A finite directed multigraph with ordered vertices and arrows.

    Loops and parallel arrows are permitted.  The constructor is
    permissive so that defective inputs can still be inspected; use
    :func:`validate_quiver` to obtain a report, or rely on the document
    parser which rejects invalid quivers outright.
    """

    vertices: tuple[str, ...]
    arrows: tuple[Arrow, ...]

    def __init__(self, vertices: Iterable[str], arrows: Iterable[Arrow | tuple] = ()):
        object.__setattr__(self, "vertices", tuple(str(v) for v in vertices))
        normalized = []
        for a in arrows:
            if not isinstance(a, Arrow):
                a = Arrow(*a)
            normalized.append(a)
        object.__setattr__(self, "arrows", tuple(normalized))

    @cached_property
    def _by_name(self) -> dict[str, Arrow]:
        return {a.name: a for a in self.arrows}

    @cached_property
    def _outgoing(self) -> dict[str, tuple[Arrow, ...]]:
        out: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            out.setdefault(a.source, []).append(a)
        return {v: tuple(lst) for v, lst in out.items()}

    @cached_property
    def _incoming(self) -> dict[str, tuple[Arrow, ...]]:
        inc: dict[str, list[Arrow]] = {v: [] for v in self.vertices}
        for a in self.arrows:
            inc.setdefault(a.target, []).append(a)
        return {v: tuple(lst) for v, lst in inc.items()}

    def has_vertex(self, v: str) -> bool:
        return v in self._outgoing or v in self.vertices

    def arrow(self, name: str) -> Arrow:
        try:
            return self._by_name[name]
        except KeyError:
            raise QPError(f"unknown arrow {name!r}") from None

    def has_arrow(self, name: str) -> bool:
        return name in self._by_name

    def arrows_from(self, v: str) -> tuple[Arrow, ...]:
        return self._outgoing.get(v, ())

    def arrows_into(self, v: str) -> tuple[Arrow, ...]:
        return self._incoming.get(v, ())

    def trivial_path(self, v: str) -> "Path":
        if v not in self._outgoing and v not in self.vertices:
            raise QPError(f"unknown vertex {v!r}")
        return Path(v, (), v)

    def path(self, names: Iterable[str], start: str | None = None) -> "Path":
        """Build a path from arrow names, validating composability."""
        names = tuple(names)
        if not names:
            if start is None:
                raise CompositionError("empty path needs an explicit vertex")
            return self.trivial_path(start)
        first = self.arrow(names[0])
        if start is not None and start != first.source:
            raise CompositionError(
                f"path starts at {first.source!r}, not {start!r}")
        at = first.source
        cur = at
        for n in names:
            a = self.arrow(n)
            if a.source != cur:
                raise CompositionError(
                    f"arrow {n!r} starts at {a.source!r} but the path is at {cur!r}")
            cur = a.target
        return Path(at, names, cur)

    def with_degrees(self, degrees: Mapping[str, int]) -> "Quiver":
        """Copy of the quiver with arrow degrees replaced.

        Arrows absent from ``degrees`` keep their degree.
        """
        return Quiver(
            self.vertices,
            [replace(a, degree=degrees.get(a.name, a.degree)) for a in self.arrows],
        )

    def without_arrows(self, names: Iterable[str]) -> "Quiver":
        drop = set(names)
        return Quiver(self.vertices, [a for a in self.arrows if a.name not in drop])

    def zero_degrees(self) -> "Quiver":
        return Quiver(self.vertices, [replace(a, degree=0) for a in self.arrows])


@dataclass(frozen=True)
class Path:
    """A composable sequence of arrows; length 0 is the idempotent at a vertex."""

    start: str
    arrows: tuple[str, ...]
    end: str

    def __len__(self) -> int:
        return len(self.arrows)

    @property
    def is_cycle(self) -> bool:
        return self.start == self.end

    def __str__(self) -> str:
        if not self.arrows:
            return f"e_{self.start}"
        return " ".join(self.arrows)


def term_key(path: Path) -> tuple:
    """Canonical term order: by length, then arrow names, then start vertex."""
    return (len(path.arrows), path.arrows, path.start)


def compose(p: Path, q: Path) -> Path:
    """Concatenate two paths; composing with a trivial path is the identity."""
    if p.end != q.start:
        raise CompositionError(
            f"cannot compose: first path ends at {p.end!r}, second starts at {q.start!r}")
    return Path(p.start, p.arrows + q.arrows, q.end)


class PathPoly:
    """A finite rational linear combination of paths.

    Zero coefficients are never stored.  Addition, subtraction, negation
    and multiplication (by a scalar or another ``PathPoly``) are exact;
    multiplication of non-composable paths contributes zero.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Path, Rational] | Iterable[tuple[Path, Rational]] = ()):
        merged: dict[Path, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for path, coeff in items:
            c = merged.get(path, Fraction(0)) + Fraction(coeff)
            if c:
                merged[path] = c
            elif path in merged:
                del merged[path]
        self._terms = merged

    @classmethod
    def of(cls, path: Path, coeff: Rational = 1) -> "PathPoly":
        return cls([(path, coeff)])

    @classmethod
    def zero(cls) -> "PathPoly":
        return cls()

    def items(self) -> Iterator[tuple[Path, Fraction]]:
        return iter(self._terms.items())

    def sorted_terms(self) -> list[tuple[Path, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: term_key(kv[0]))

    def coefficient(self, path: Path) -> Fraction:
        return self._terms.get(path, Fraction(0))

    def paths(self) -> Iterator[Path]:
        return iter(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, PathPoly) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "PathPoly") -> "PathPoly":
        if not isinstance(other, PathPoly):
            return NotImplemented
        out = dict(self._terms)
        for p, c in other._terms.items():
            s = out.get(p, Fraction(0)) + c
            if s:
                out[p] = s
            elif p in out:
                del out[p]
        poly = PathPoly.__new__(PathPoly)
        poly._terms = out
        return poly

    def __neg__(self) -> "PathPoly":
        poly = PathPoly.__new__(PathPoly)
        poly._terms = {p: -c for p, c in self._terms.items()}
        return poly

    def __sub__(self, other: "PathPoly") -> "PathPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, PathPoly):
            out: dict[Path, Fraction] = {}
            for p, cp in self._terms.items():
                for q, cq in other._terms.items():
                    if p.end != q.start:
                        continue
                    r = Path(p.start, p.arrows + q.arrows, q.end)
                    s = out.get(r, Fraction(0)) + cp * cq
                    if s:
                        out[r] = s
                    elif r in out:
                        del out[r]
            poly = PathPoly.__new__(PathPoly)
            poly._terms = out
            return poly
        return self._scale(other)

    def __rmul__(self, other):
        return self._scale(other)

    def _scale(self, scalar: Rational) -> "PathPoly":
        c = Fraction(scalar)
        if not c:
            return PathPoly.zero()
        poly = PathPoly.__new__(PathPoly)
        poly._terms = {p: c * v for p, v in self._terms.items()}
        return poly

    def truncated(self, bound: int) -> "PathPoly":
        poly = PathPoly.__new__(PathPoly)
        poly._terms = {p: c for p, c in self._terms.items() if len(p) <= bound}
        return poly

    def max_length(self) -> int:
        return max((len(p) for p in self._terms), default=0)

    def min_length(self) -> int:
        return min((len(p) for p in self._terms), default=0)

    def is_basic(self) -> bool:
        """True when all terms share one start vertex and one end vertex."""
        if not self._terms:
            return True
        starts = {p.start for p in self._terms}
        ends = {p.end for p in self._terms}
        return len(starts) == 1 and len(ends) == 1

    def source(self) -> str:
        starts = {p.start for p in self._terms}
        if len(starts) != 1:
            raise QPError("element is not basic; it has no single source")
        return next(iter(starts))

    def target(self) -> str:
        ends = {p.end for p in self._terms}
        if len(ends) != 1:
            raise QPError("element is not basic; it has no single target")
        return next(iter(ends))

    def contains_arrow(self, name: str) -> bool:
        return any(name in p.arrows for p in self._terms)

    def __str__(self) -> str:
        return format_poly(self)

    __repr__ = __str__


def format_poly(poly: PathPoly, explicit_ones: bool = False) -> str:
    """Render a polynomial in canonical term order.

    With ``explicit_ones`` every coefficient is printed, which is the
    form used by the document emitter.
    """
    if not poly:
        return "0"
    parts: list[str] = []
    for i, (path, coeff) in enumerate(poly.sorted_terms()):
        mag = abs(coeff)
        body = str(path)
        if explicit_ones or mag != 1 or not path.arrows:
            body = f"{mag} {body}"
        if i == 0:
            parts.append(body if coeff > 0 else f"- {body}")
        else:
            parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(parts)


def arrow_poly(quiver: Quiver, name: str) -> PathPoly:
    a = quiver.arrow(name)
    return PathPoly.of(Path(a.source, (name,), a.target))


def vertex_poly(quiver: Quiver, v: str) -> PathPoly:
    return PathPoly.of(quiver.trivial_path(v))


def substitute(
    x: PathPoly,
    assignment: Mapping[str, PathPoly],
    quiver: Quiver,
    bound: int = DEFAULT_BOUND,
) -> PathPoly:
    """Apply an arrow substitution, truncating terms longer than ``bound``.

    Each assigned value must be basic with the same endpoints as the
    arrow it replaces (the zero polynomial is allowed).  Unassigned
    arrows map to themselves.  This realizes the algebra endomorphisms
    of the complete path algebra that fix the vertex idempotents.
    """
    poly, _ = substitute_report(x, assignment, quiver, bound)
    return poly


def substitute_report(
    x: PathPoly,
    assignment: Mapping[str, PathPoly],
    quiver: Quiver,
    bound: int = DEFAULT_BOUND,
) -> tuple[PathPoly, bool]:
    """Like :func:`substitute` but also reports whether truncation fired."""
    if bound < 1:
        raise SubstitutionError("truncation bound must be >= 1")
    for name, value in assignment.items():
        a = quiver.arrow(name)
        if not value:
            continue
        if not value.is_basic():
            raise SubstitutionError(f"value for {name!r} is not basic")
        if value.source() != a.source or value.target() != a.target:
            raise SubstitutionError(
                f"value for {name!r} runs {value.source()!r} -> {value.target()!r}, "
                f"expected {a.source!r} -> {a.target!r}")
    truncated = False
    result = PathPoly.zero()
    for path, coeff in x.items():
        acc = PathPoly.of(Path(path.start, (), path.start), coeff)
        for name in path.arrows:
            factor = assignment.get(name)
            if factor is None:
                factor = arrow_poly(quiver, name)
            acc = acc * factor
            longest = acc.max_length()
            acc = acc.truncated(bound)
            if longest > bound:
                truncated = True
            if not acc:
                break
        result = result + acc
    return result, truncated


@dataclass
class QuiverReport:
    """Outcome of :func:`validate_quiver`; errors make the quiver unusable,
    warnings are advisory."""

    errors: list[str]
    warnings: list[str]

    @property
    def ok(self) -> bool:
        return not self.errors


def validate_quiver(q: Quiver) -> QuiverReport:
    """Check name uniqueness, endpoint declarations and connectivity."""
    errors: list[str] = []
    warnings: list[str] = []
    seen_v: set[str] = set()
    for v in q.vertices:
        if v in seen_v:
            errors.append(f"duplicate vertex {v!r}")
        seen_v.add(v)
    seen_a: set[str] = set()
    for a in q.arrows:
        if a.name in seen_a:
            errors.append(f"duplicate arrow name {a.name!r}")
        seen_a.add(a.name)
        if a.source not in seen_v:
            errors.append(f"arrow {a.name!r} starts at undeclared vertex {a.source!r}")
        if a.target not in seen_v:
            errors.append(f"arrow {a.name!r} ends at undeclared vertex {a.target!r}")
    if not q.vertices:
        warnings.append("quiver has no vertices")
    elif not errors:
        # weak connectivity via union-find
        parent = {v: v for v in q.vertices}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        for a in q.arrows:
            ra, rb = find(a.source), find(a.target)
            if ra != rb:
                parent[ra] = rb
        roots = {find(v) for v in q.vertices}
        if len(roots) > 1:
            warnings.append(f"quiver is not connected ({len(roots)} components)")
    return QuiverReport(errors, warnings)
