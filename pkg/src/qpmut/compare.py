"""Isomorphism of QPs over a fixed vertex set.

Mutation output arrows carry starred and bracketed names, so comparing
against a plainly named target needs an arrow bijection that fixes the
vertices, respects endpoints and degrees, and matches the potentials
after canonicalization.  Quivers here are tiny, so backtracking over
the arrows grouped by (source, target, degree) is plenty.
"""

from __future__ import annotations

from itertools import permutations

from .core import PathPoly, Quiver
from .potential import GradedQP, canonicalize_potential


def _groups(q: Quiver) -> dict[tuple[str, str, int], list[str]]:
    out: dict[tuple[str, str, int], list[str]] = {}
    for a in q.arrows:
        out.setdefault((a.source, a.target, a.degree), []).append(a.name)
    return out


def arrow_bijections(q1: Quiver, q2: Quiver):
    """Yield name maps q1 -> q2 preserving endpoints and degrees."""
    if tuple(q1.vertices) != tuple(q2.vertices):
        return
    g1, g2 = _groups(q1), _groups(q2)
    if set(g1) != set(g2) or any(len(g1[k]) != len(g2[k]) for k in g1):
        return
    keys = sorted(g1)
    choices = [list(permutations(g2[k])) for k in keys]

    def rec(i, acc):
        if i == len(keys):
            yield dict(acc)
            return
        for perm in choices[i]:
            extended = acc + list(zip(g1[keys[i]], perm))
            yield from rec(i + 1, extended)

    yield from rec(0, [])


def rename_potential(w: PathPoly, mapping: dict[str, str], target: Quiver) -> PathPoly:
    terms = []
    for path, coeff in w.items():
        terms.append((target.path([mapping[n] for n in path.arrows]), coeff))
    return canonicalize_potential(PathPoly(terms), target)


def qps_isomorphic(g1: GradedQP, g2: GradedQP,
                   cut1: frozenset[str] | None = None,
                   cut2: frozenset[str] | None = None,
                   allow_sign_twist: bool = False) -> dict[str, str] | None:
    """An arrow bijection carrying one QP (and cut) onto the other, or None.

    With ``allow_sign_twist`` the potentials may additionally differ by
    rescaling arrows by -1 (a diagonal right-equivalence); reduction
    pins representatives down only up to such changes.
    """
    for mapping in arrow_bijections(g1.quiver, g2.quiver):
        renamed = rename_potential(g1.potential, mapping, g2.quiver)
        if renamed != g2.potential:
            if not (allow_sign_twist and _sign_twist_exists(renamed, g2.potential)):
                continue
        if cut1 is not None and cut2 is not None:
            if {mapping[n] for n in cut1} != set(cut2):
                continue
        return mapping
    return None


def presentations_isomorphic(p1, p2) -> dict[str, str] | None:
    """An arrow bijection (fixed vertices) matching the relation ideals'
    generators: monic relations must agree as multisets after renaming."""
    from .presentation import monic

    targets = sorted((monic(r.poly) for r in p2.relations), key=str)
    for mapping in arrow_bijections(p1.quiver, p2.quiver):
        renamed = []
        for r in p1.relations:
            terms = [(p2.quiver.path([mapping[n] for n in path.arrows]), c)
                     for path, c in r.poly.items()]
            renamed.append(monic(PathPoly(terms)))
        if sorted(renamed, key=str) == targets:
            return mapping
    return None


def _sign_twist_exists(w1: PathPoly, w2: PathPoly) -> bool:
    """Is there a sign vector on arrows with w1 rescaled equal to w2?

    Each shared term whose coefficients differ by -1 (respectively +1)
    forces the parity of its odd-multiplicity arrows; solve the parity
    system by Gaussian elimination over GF(2).
    """
    t1 = dict(w1.items())
    t2 = dict(w2.items())
    if set(t1) != set(t2):
        return False
    arrows = sorted({n for p in t1 for n in p.arrows})
    index = {n: i for i, n in enumerate(arrows)}
    rows: list[tuple[int, int]] = []  # bitmask, parity
    for path, c1 in t1.items():
        ratio = t2[path] / c1
        if ratio == 1:
            parity = 0
        elif ratio == -1:
            parity = 1
        else:
            return False
        mask = 0
        for n in set(path.arrows):
            if path.arrows.count(n) % 2:
                mask |= 1 << index[n]
        rows.append((mask, parity))
    basis: dict[int, tuple[int, int]] = {}
    for mask, parity in rows:
        while mask:
            top = mask.bit_length() - 1
            if top not in basis:
                basis[top] = (mask, parity)
                break
            bm, bp = basis[top]
            mask ^= bm
            parity ^= bp
        else:
            if parity:
                return False
    return True
