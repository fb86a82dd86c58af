"""Dense exact-rational matrices, just enough for the analysis module.

Matrices are small (algebra dimensions around 10-100), so plain
Gaussian elimination over `fractions.Fraction` is both exact and fast
enough; no external linear-algebra dependency is worth the loss of
exactness here.
"""

from __future__ import annotations

from fractions import Fraction


class Mat:
    """An exact rational matrix with explicit shape (rows may be zero)."""

    __slots__ = ("m", "n", "a")

    def __init__(self, m: int, n: int, rows=None):
        self.m = m
        self.n = n
        if rows is None:
            self.a = [[Fraction(0)] * n for _ in range(m)]
        else:
            self.a = [[Fraction(x) for x in row] for row in rows]
            assert len(self.a) == m and all(len(r) == n for r in self.a)

    @staticmethod
    def zeros(m: int, n: int) -> "Mat":
        return Mat(m, n)

    @staticmethod
    def identity(n: int) -> "Mat":
        out = Mat(n, n)
        for i in range(n):
            out.a[i][i] = Fraction(1)
        return out

    @staticmethod
    def from_columns(m: int, cols: list[list[Fraction]]) -> "Mat":
        out = Mat(m, len(cols))
        for j, col in enumerate(cols):
            for i in range(m):
                out.a[i][j] = Fraction(col[i])
        return out

    def copy(self) -> "Mat":
        return Mat(self.m, self.n, self.a)

    def column(self, j: int) -> list[Fraction]:
        return [self.a[i][j] for i in range(self.m)]

    def columns(self) -> list[list[Fraction]]:
        return [self.column(j) for j in range(self.n)]

    def transpose(self) -> "Mat":
        return Mat(self.n, self.m, [[self.a[i][j] for i in range(self.m)]
                                    for j in range(self.n)])

    def mul(self, other: "Mat") -> "Mat":
        assert self.n == other.m, (self.n, other.m)
        out = Mat(self.m, other.n)
        for i in range(self.m):
            row = self.a[i]
            for k in range(self.n):
                c = row[k]
                if not c:
                    continue
                orow = other.a[k]
                trow = out.a[i]
                for j in range(other.n):
                    if orow[j]:
                        trow[j] += c * orow[j]
        return out

    def mul_vec(self, v: list[Fraction]) -> list[Fraction]:
        assert self.n == len(v)
        return [sum((self.a[i][j] * v[j] for j in range(self.n) if v[j]),
                    Fraction(0)) for i in range(self.m)]

    def hstack(self, other: "Mat") -> "Mat":
        assert self.m == other.m
        return Mat(self.m, self.n + other.n,
                   [self.a[i] + other.a[i] for i in range(self.m)])

    def is_zero(self) -> bool:
        return all(not x for row in self.a for x in row)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Mat) and self.m == other.m
                and self.n == other.n and self.a == other.a)

    def __repr__(self) -> str:
        return f"Mat({self.m}x{self.n})"


def rref(mat: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    r = mat.copy()
    pivots: list[int] = []
    row = 0
    for col in range(r.n):
        if row >= r.m:
            break
        sel = next((i for i in range(row, r.m) if r.a[i][col]), None)
        if sel is None:
            continue
        r.a[row], r.a[sel] = r.a[sel], r.a[row]
        inv = 1 / r.a[row][col]
        r.a[row] = [x * inv for x in r.a[row]]
        for i in range(r.m):
            if i != row and r.a[i][col]:
                f = r.a[i][col]
                r.a[i] = [x - f * y for x, y in zip(r.a[i], r.a[row])]
        pivots.append(col)
        row += 1
    return r, pivots


def rank(mat: Mat) -> int:
    return len(rref(mat)[1])


def nullspace(mat: Mat) -> list[list[Fraction]]:
    """A basis of the right kernel, one vector per free column."""
    r, pivots = rref(mat)
    pivot_set = set(pivots)
    free = [j for j in range(mat.n) if j not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * mat.n
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r.a[i][f]
        basis.append(v)
    return basis


def solve_in_span(basis: Mat, targets: Mat) -> Mat:
    """Solve ``basis @ X = targets`` for column vectors known to lie in
    the span of the basis columns (used to restrict maps to submodules)."""
    aug, pivots = rref(basis.hstack(targets))
    if any(p >= basis.n for p in pivots):
        raise ValueError("target columns are not in the span of the basis")
    out = Mat(basis.n, targets.n)
    for i, p in enumerate(pivots):
        for j in range(targets.n):
            out.a[p][j] = aug.a[i][basis.n + j]
    return out


def column_space_complement(mat: Mat) -> list[int]:
    """Indices of standard basis vectors completing the column space.

    Row-reducing ``[mat | I]`` and keeping the identity columns that
    become pivots gives a deterministic complement.
    """
    aug = mat.hstack(Mat.identity(mat.m))
    _, pivots = rref(aug)
    return [p - mat.n for p in pivots if p >= mat.n]


def express_in_columns(basis: Mat, vec: list[Fraction]) -> list[Fraction] | None:
    """Coordinates of ``vec`` in the span of the basis columns, or None."""
    target = Mat(basis.m, 1, [[x] for x in vec])
    aug, pivots = rref(basis.hstack(target))
    if any(p >= basis.n for p in pivots):
        return None
    out = [Fraction(0)] * basis.n
    for i, p in enumerate(pivots):
        out[p] = aug.a[i][basis.n]
    return out
