"""Potentials on a quiver: cyclic canonical form, derivatives, gradings.

A potential is a linear combination of cycles of length at least 2,
considered up to rotation of each cycle.  We store the unique
representative that rotates every cycle to its lexicographically
minimal arrow sequence (ties broken by the first rotation index), so
cyclically equivalent inputs normalize to equal polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Path, PathPoly, Quiver
from .errors import GradingError, PotentialError, QPError


def rotate_cycle(quiver: Quiver, path: Path, offset: int) -> Path:
    """Rotate a cyclic path to start at position ``offset``."""
    if not path.is_cycle:
        raise PotentialError(f"cannot rotate non-cycle {path}")
    names = path.arrows[offset:] + path.arrows[:offset]
    start = quiver.arrow(names[0]).source if names else path.start
    return Path(start, names, start)


def canonical_rotation(quiver: Quiver, path: Path) -> Path:
    d = len(path.arrows)
    if d == 0:
        return path
    best = min(range(d), key=lambda i: path.arrows[i:] + path.arrows[:i])
    return rotate_cycle(quiver, path, best)


def canonicalize_potential(w: PathPoly, quiver: Quiver) -> PathPoly:
    """Rotation-minimal representative with like terms merged.

    Raises :class:`PotentialError` on a non-cycle term or a term of
    length < 2.
    """
    out = PathPoly.zero()
    for path, coeff in w.items():
        if len(path) < 2:
            raise PotentialError(f"potential term {path} has length < 2")
        if not path.is_cycle:
            raise PotentialError(
                f"potential term {path} is not a cycle ({path.start!r} -> {path.end!r})")
        out = out + PathPoly.of(canonical_rotation(quiver, path), coeff)
    return out


def cyclic_derivative(w: PathPoly, arrow: str, quiver: Quiver) -> PathPoly:
    """Sum over the occurrences of ``arrow`` in each cycle of the rotated
    remainder; the result runs from the arrow's target to its source."""
    a = quiver.arrow(arrow)
    out = PathPoly.zero()
    for path, coeff in w.items():
        names = path.arrows
        for i, n in enumerate(names):
            if n != arrow:
                continue
            rest = names[i + 1:] + names[:i]
            out = out + PathPoly.of(Path(a.target, rest, a.source), coeff)
    return out


def left_derivative(x: PathPoly, arrow: str, quiver: Quiver) -> PathPoly:
    """Strip a leading occurrence of ``arrow``: a1...am -> a2...am when a1
    is the arrow, else 0."""
    a = quiver.arrow(arrow)
    out = PathPoly.zero()
    for path, coeff in x.items():
        if len(path) == 0:
            raise QPError("left derivative needs terms of length >= 1")
        if path.arrows[0] == arrow:
            out = out + PathPoly.of(Path(a.target, path.arrows[1:], path.end), coeff)
    return out


def right_derivative(x: PathPoly, arrow: str, quiver: Quiver) -> PathPoly:
    """Strip a trailing occurrence of ``arrow``: a1...am -> a1...a(m-1)
    when am is the arrow, else 0."""
    a = quiver.arrow(arrow)
    out = PathPoly.zero()
    for path, coeff in x.items():
        if len(path) == 0:
            raise QPError("right derivative needs terms of length >= 1")
        if path.arrows[-1] == arrow:
            out = out + PathPoly.of(Path(path.start, path.arrows[:-1], a.source), coeff)
    return out


def partial_derivative(side: str, x: PathPoly, arrow: str, quiver: Quiver) -> PathPoly:
    if side == "left":
        return left_derivative(x, arrow, quiver)
    if side == "right":
        return right_derivative(x, arrow, quiver)
    raise QPError(f"unknown derivative side {side!r}")


def path_degree(path: Path, quiver: Quiver) -> int:
    return sum(quiver.arrow(n).degree for n in path.arrows)


def homogeneity_degree(w: PathPoly, quiver: Quiver) -> int:
    """The common degree of all potential terms under the arrow degrees.

    Raises :class:`GradingError` when the potential is zero (no degree
    to report) or when terms have mixed degrees; the error lists the
    offending terms.
    """
    if not w:
        raise GradingError("the zero potential has no homogeneity degree")
    degs = {}
    for path, _ in w.sorted_terms():
        degs.setdefault(path_degree(path, quiver), []).append(path)
    if len(degs) > 1:
        detail = "; ".join(
            f"degree {d}: {', '.join(str(p) for p in ps)}" for d, ps in sorted(degs.items()))
        raise GradingError(f"potential is not homogeneous ({detail})")
    return next(iter(degs))


@dataclass(frozen=True)
class GradedQP:
    """A quiver together with a potential and an optional declared degree.

    The potential is canonicalized at construction time.  When
    ``declared_degree`` is set, every term must be homogeneous of that
    degree under the arrow degrees; cut-induced gradings declare 1.
    """

    quiver: Quiver
    potential: PathPoly
    declared_degree: int | None = None

    def __post_init__(self):
        canonical = canonicalize_potential(self.potential, self.quiver)
        object.__setattr__(self, "potential", canonical)
        if self.declared_degree is not None and canonical:
            actual = homogeneity_degree(canonical, self.quiver)
            if actual != self.declared_degree:
                raise GradingError(
                    f"potential has degree {actual}, declared {self.declared_degree}")

    def degree(self, default: int = 1) -> int:
        """The homogeneity degree used by graded mutation.

        Falls back to the declared degree, then to ``default`` when the
        potential is zero and nothing was declared.
        """
        if self.declared_degree is not None:
            return self.declared_degree
        if self.potential:
            return homogeneity_degree(self.potential, self.quiver)
        return default

    def is_reduced(self) -> bool:
        """No terms of length 2."""
        return all(len(p) > 2 for p in self.potential.paths())

    def degree_one_arrows(self) -> frozenset[str]:
        return frozenset(a.name for a in self.quiver.arrows if a.degree == 1)
