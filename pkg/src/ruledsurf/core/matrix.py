"""Graded matrices over a polynomial ring."""

from __future__ import annotations

from itertools import combinations
from typing import Sequence

from .ring import Polynomial, PolyRing, differentiate


class RingMatrix:
    """A matrix of polynomials with row and column twists.

    Entry (i, j) is zero or homogeneous of degree ``col_twists[j] - row_twists[i]``,
    i.e. row twists are the degrees of the target generators and column
    twists the degrees of the source generators.
    """

    __slots__ = ("ring", "entries", "row_twists", "col_twists")

    def __init__(self, ring: PolyRing, entries: Sequence[Sequence[Polynomial]],
                 row_twists: Sequence[int] | None = None, col_twists: Sequence[int] | None = None,
                 ncols: int | None = None):
        rows = [list(r) for r in entries]
        nr = len(rows)
        nc = len(rows[0]) if rows else (ncols or 0)
        if any(len(r) != nc for r in rows):
            raise ValueError("ragged matrix")
        self.ring = ring
        self.entries = rows
        self.row_twists = tuple(row_twists) if row_twists is not None else (0,) * nr
        if len(self.row_twists) != nr:
            raise ValueError("row twist count mismatch")
        if col_twists is None:
            col_twists = []
            for j in range(nc):
                t = None
                for i in range(nr):
                    e = rows[i][j]
                    if e:
                        t = e.degree() + self.row_twists[i]
                        break
                col_twists.append(t if t is not None else 0)
        self.col_twists = tuple(col_twists)
        if len(self.col_twists) != nc:
            raise ValueError("column twist count mismatch")

    # -- shape --------------------------------------------------------
    @property
    def nrows(self) -> int:
        return len(self.entries)

    @property
    def ncols(self) -> int:
        return len(self.col_twists)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> list[Polynomial]:
        return [r[j] for r in self.entries]

    def columns(self) -> list[list[Polynomial]]:
        return [self.column(j) for j in range(self.ncols)]

    def row(self, i: int) -> list[Polynomial]:
        return list(self.entries[i])

    @classmethod
    def from_columns(cls, ring: PolyRing, cols: Sequence[Sequence[Polynomial]],
                     row_twists: Sequence[int], col_twists: Sequence[int] | None = None) -> "RingMatrix":
        nr = len(row_twists)
        entries = [[c[i] for c in cols] for i in range(nr)]
        return cls(ring, entries, row_twists, col_twists, ncols=len(cols))

    @classmethod
    def zeros(cls, ring: PolyRing, row_twists: Sequence[int], col_twists: Sequence[int]) -> "RingMatrix":
        z = ring.zero()
        return cls(ring, [[z] * len(col_twists) for _ in row_twists], row_twists, col_twists, ncols=len(col_twists))

    @classmethod
    def identity(cls, ring: PolyRing, twists: Sequence[int]) -> "RingMatrix":
        n = len(twists)
        return cls(ring, [[ring.one() if i == j else ring.zero() for j in range(n)] for i in range(n)],
                   twists, twists)

    # -- algebra --------------------------------------------------------
    def is_homogeneous(self) -> bool:
        for i, r in enumerate(self.entries):
            for j, e in enumerate(r):
                if e and (not e.is_homogeneous() or e.degree() != self.col_twists[j] - self.row_twists[i]):
                    return False
        return True

    def is_zero(self) -> bool:
        return all(not e for r in self.entries for e in r)

    def transpose(self) -> "RingMatrix":
        ent = [[self.entries[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return RingMatrix(self.ring, ent, [-t for t in self.col_twists], [-t for t in self.row_twists],
                          ncols=self.nrows)

    def __mul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        zero = self.ring.zero()
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    a, b = self.entries[i][k], other.entries[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return RingMatrix(self.ring, out, self.row_twists, other.col_twists, ncols=other.ncols)

    def scale(self, c) -> "RingMatrix":
        return RingMatrix(self.ring, [[e * c for e in r] for r in self.entries],
                          self.row_twists, self.col_twists, ncols=self.ncols)

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return RingMatrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)],
                          self.row_twists, self.col_twists, ncols=self.ncols)

    def hstack(self, other: "RingMatrix") -> "RingMatrix":
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return RingMatrix(self.ring, [a + b for a, b in zip(self.entries, other.entries)],
                          self.row_twists, self.col_twists + other.col_twists,
                          ncols=self.ncols + other.ncols)

    def vstack(self, other: "RingMatrix") -> "RingMatrix":
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return RingMatrix(self.ring, self.entries + other.entries, self.row_twists + other.row_twists,
                          self.col_twists, ncols=self.ncols)

    def submatrix(self, rows: Sequence[int] | None = None, cols: Sequence[int] | None = None) -> "RingMatrix":
        rows = range(self.nrows) if rows is None else rows
        cols = range(self.ncols) if cols is None else cols
        return RingMatrix(self.ring, [[self.entries[i][j] for j in cols] for i in rows],
                          [self.row_twists[i] for i in rows], [self.col_twists[j] for j in cols],
                          ncols=len(cols))

    def map_entries(self, fn, ring: PolyRing | None = None) -> "RingMatrix":
        return RingMatrix(ring or self.ring, [[fn(e) for e in r] for r in self.entries],
                          self.row_twists, self.col_twists, ncols=self.ncols)

    def __eq__(self, other):
        return (isinstance(other, RingMatrix) and self.shape == other.shape
                and self.entries == other.entries)

    def __repr__(self):
        rows = "; ".join(", ".join(str(e) for e in r) for r in self.entries)
        return f"RingMatrix({self.nrows}x{self.ncols}: [{rows}])"

    # -- determinants ---------------------------------------------------
    def det(self) -> Polynomial:
        if self.nrows != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        if self.nrows == 0:
            return self.ring.one()
        memo: dict = {}
        return _laplace(self.entries, tuple(range(self.nrows)), tuple(range(self.ncols)), memo, self.ring)

    def minors(self, k: int) -> list[Polynomial]:
        """All k x k minors (row subsets outer, column subsets inner)."""
        if not 1 <= k <= min(self.nrows, self.ncols):
            raise ValueError(f"minor size {k} out of range for a {self.nrows}x{self.ncols} matrix")
        memo: dict = {}
        out = []
        for rs in combinations(range(self.nrows), k):
            for cs in combinations(range(self.ncols), k):
                out.append(_laplace(self.entries, rs, cs, memo, self.ring))
        return out


def _laplace(ent, rows: tuple, cols: tuple, memo: dict, ring: PolyRing) -> Polynomial:
    """Cofactor expansion along the first row, memoized on (rows, cols)."""
    if len(rows) == 1:
        return ent[rows[0]][cols[0]]
    key = (rows, cols)
    hit = memo.get(key)
    if hit is not None:
        return hit
    r0, rest = rows[0], rows[1:]
    acc = ring.zero()
    for t, c in enumerate(cols):
        a = ent[r0][c]
        if not a:
            continue
        sub = _laplace(ent, rest, cols[:t] + cols[t + 1:], memo, ring)
        if not sub:
            continue
        term = a * sub
        acc = acc - term if t % 2 else acc + term
    memo[key] = acc
    return acc


def jacobian_matrix(gens: Sequence[Polynomial], ring: PolyRing | None = None) -> RingMatrix:
    """Entry (i, j) = d gens[j] / d x_i (variables by generators)."""
    if not gens:
        return RingMatrix(ring, [], (), (), ncols=0)
    ring = gens[0].ring
    if any(g.ring != ring for g in gens):
        raise ValueError("generators from different rings")
    ent = [[differentiate(g, i) for g in gens] for i in range(ring.nvars)]
    return RingMatrix(ring, ent, list(ring.weights), [g.degree() for g in gens], ncols=len(gens))


def minors_ideal(k: int, M: RingMatrix):
    from ..groebner.ideal import Ideal
    return Ideal([m for m in dict.fromkeys(M.minors(k)) if m], M.ring)
