"""Minimal graded free resolutions and Betti tables."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ..core.linalg import nullspace, row_reduce
from ..core.matrix import RingMatrix
from ..core.ring import PolyRing
from ..rng import SeedStream
from . import hilbert as hb
from .engine import ModuleLayout, buchberger
from .ideal import Ideal
from .modgb import syzygy_matrix


@dataclass
class BettiTable:
    """Graded Betti numbers: ``ranks[(i, j)]`` is the number of generators of
    degree j in homological position i."""

    ranks: dict[tuple[int, int], int] = field(default_factory=dict)

    @classmethod
    def from_twists(cls, twists_per_step: list[list[int]]) -> "BettiTable":
        ranks: Counter = Counter()
        for i, tw in enumerate(twists_per_step):
            for j in tw:
                ranks[(i, j)] += 1
        return cls(dict(ranks))

    @property
    def length(self) -> int:
        return max((i for i, _ in self.ranks), default=-1) + 1

    def totals(self) -> list[int]:
        out = [0] * self.length
        for (i, _), b in self.ranks.items():
            out[i] += b
        return out

    def rows(self) -> dict[int, list[int]]:
        """Row s lists the ranks b_{i, i+s}, as in the usual display."""
        lo = min((j - i for i, j in self.ranks), default=0)
        hi = max((j - i for i, j in self.ranks), default=-1)
        return {s: [self.ranks.get((i, i + s), 0) for i in range(self.length)] for s in range(lo, hi + 1)}

    def hilbert_value(self, t: int, nvars: int) -> int:
        """Alternating sum of the free module dimensions in degree t."""
        from math import comb
        acc = 0
        for (i, j), b in self.ranks.items():
            if t - j >= 0:
                acc += (-1) ** i * b * comb(t - j + nvars - 1, nvars - 1)
        return acc

    def render(self) -> str:
        tot = self.totals()
        rows = self.rows()
        cells = [["total:"] + [str(b) for b in tot]]
        for s, vals in rows.items():
            cells.append([f"{s}:"] + [str(b) if b else "." for b in vals])
        widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
        return "\n".join(" ".join(x.rjust(w) for x, w in zip(r, widths)) for r in cells)

    def __str__(self):
        return self.render()


@dataclass
class Resolution:
    maps: list[RingMatrix]
    betti: BettiTable

    def composes_to_zero(self) -> bool:
        return all((a * b).is_zero() for a, b in zip(self.maps, self.maps[1:]))

    def has_unit_entries(self) -> bool:
        return any(e and e.is_constant() for M in self.maps for row in M.entries for e in row)


def _strongly_stable(exps: list[tuple[int, ...]], n: int) -> bool:
    gens = hb.minimalize(exps)

    def member(e):
        return any(all(a >= b for a, b in zip(e, g)) for g in gens)

    for g in gens:
        for j in range(1, n):
            if not g[j]:
                continue
            for i in range(j):
                e = list(g)
                e[j] -= 1
                e[i] += 1
                if not member(e):
                    return False
    return True


def regularity(I: Ideal, seed: int = 0, tries: int = 8) -> int:
    """Castelnuovo-Mumford regularity bound reg(I) from a strongly stable
    initial ideal (generic coordinates).  Exact when the coordinates are generic;
    always an upper bound, since reg(I) <= reg(in I) = max generator degree."""
    ring = I.ring
    if ring.is_quotient or any(w != 1 for w in ring.weights):
        raise ValueError("regularity needs a standard graded polynomial ring")
    n = ring.nvars
    gens = [g for g in I.mingens() if g]
    if not gens:
        return 0
    stream = SeedStream(seed).child("gin")
    for t in range(tries):
        if t == 0:
            moved = gens
        else:
            cs = stream.child(str(t)).field_elements(n * n, ring.p)
            images = []
            for i in range(n):
                f = ring.var(i)
                for j in range(n):
                    if j != i and cs[i * n + j]:
                        f = f + ring.var(j).scale(cs[i * n + j])
                images.append(f)
            moved = [g.substitute(images, ring) for g in gens]
        res = buchberger(ModuleLayout(ring.mono), ring.p, [dict(g.terms) for g in moved])
        lead = [e for _, e in res.leading_exponents()]
        if _strongly_stable(lead, n):
            return max(sum(e) for e in hb.minimalize(lead))
    raise RuntimeError("no strongly stable initial ideal found; coordinates too special")


class _Graded:
    """Degree-d slices of a graded free module sum_j T(-c_j)."""

    def __init__(self, ring: PolyRing, twists):
        self.ring = ring
        self.twists = list(twists)
        self._cache = {}

    def basis(self, d: int):
        if d not in self._cache:
            items = []
            for j, c in enumerate(self.twists):
                if d - c >= 0:
                    for m in self.ring.monomials_of_degree(d - c):
                        items.append((j, m.lead_key()))
            self._cache[d] = (items, {it: k for k, it in enumerate(items)})
        return self._cache[d]


def _map_matrix(M: RingMatrix, src: _Graded, tgt: _Graded, d: int) -> np.ndarray:
    mono = M.ring.mono
    sb, _ = src.basis(d)
    _, tidx = tgt.basis(d)
    A = np.zeros((len(tidx), len(sb)), dtype=np.int64)
    cols = M.columns()
    for s, (j, m) in enumerate(sb):
        for k, e in enumerate(cols[j]):
            for key, c in e.terms.items():
                A[tidx[(k, mono.mul(key, m))], s] = c
    return A


def _shift_rows(K: np.ndarray, src: _Graded, d: int) -> np.ndarray:
    """All products x_v * (rows of K) for K in degree d - 1, as degree-d vectors."""
    ring = src.ring
    mono = ring.mono
    old, _ = src.basis(d - 1)
    _, new = src.basis(d)
    out = []
    for v in range(ring.nvars):
        xv = mono.var(v)
        idx = np.array([new[(j, mono.mul(m, xv))] for j, m in old], dtype=np.int64)
        block = np.zeros((K.shape[0], len(new)), dtype=np.int64)
        block[:, idx] = K
        out.append(block)
    return np.vstack(out) if out else np.zeros((0, len(new)), dtype=np.int64)


def _minimal_kernel(M: RingMatrix, top: int) -> RingMatrix:
    """Minimal generators (of degree <= top) of the kernel of M between free modules."""
    ring = M.ring
    p = ring.p
    src = _Graded(ring, M.col_twists)
    tgt = _Graded(ring, M.row_twists)
    lo = min(M.col_twists)
    prev = None
    cols, degs = [], []
    for d in range(lo, top + 1):
        sb, _ = src.basis(d)
        if not sb:
            prev = np.zeros((0, 0), dtype=np.int64)
            continue
        K = nullspace(_map_matrix(M, src, tgt, d), p, ncols=len(sb))
        if K.shape[0] == 0:
            prev = K
            continue
        if prev is not None and prev.shape[0] and d > lo:
            shifted = _shift_rows(prev, src, d)
            R, piv = row_reduce(shifted, p)
            span = R[:len(piv)]
        else:
            span = np.zeros((0, len(sb)), dtype=np.int64)
        # K is in echelon-like form on free columns; extend span greedily
        basis_rows = span
        rank = basis_rows.shape[0]
        for row in K:
            trial = np.vstack([basis_rows, row[None, :]])
            r2 = len(row_reduce(trial, p)[1])
            if r2 > rank:
                basis_rows, rank = trial, r2
                cols.append(_vector_to_column(row, sb, ring, len(M.col_twists)))
                degs.append(d)
            if rank == K.shape[0]:
                break
        prev = K
    if not cols:
        return RingMatrix.zeros(ring, M.col_twists, [])
    ent = [[cols[c][r] for c in range(len(cols))] for r in range(len(M.col_twists))]
    return RingMatrix(ring, ent, M.col_twists, degs)


def _vector_to_column(row, sb, ring, rank):
    terms = [dict() for _ in range(rank)]
    for (j, m), c in zip(sb, row):
        if c:
            terms[j][m] = int(c)
    return [ring.from_terms(t, reduce=False) for t in terms]


def minimal_free_resolution(X, max_length: int | None = None, seed: int = 0) -> Resolution:
    """Minimal graded free resolution of T/I (for an Ideal) or of a module.

    For ideals of a standard graded polynomial ring each syzygy module is
    computed degree by degree by linear algebra, up to the regularity bound.
    Modules fall back to iterated module Gröbner bases."""
    from ..modules import GradedModule, prune_presentation
    if isinstance(X, Ideal):
        ring = X.ring
        gens = list(X.mingens())
        if not gens:
            return Resolution([], BettiTable({(0, 0): 1}))
        first = RingMatrix(ring, [gens], [0])
        linear = not ring.is_quotient and all(w == 1 for w in ring.weights)
    elif isinstance(X, GradedModule):
        first = prune_presentation(X).presentation
        ring = first.ring
        linear = False
    else:
        raise TypeError("expected an Ideal or a GradedModule")
    if ring.is_quotient and max_length is None:
        raise ValueError("resolutions over quotient rings need max_length")
    reg = regularity(X, seed) if linear else None
    maps = []
    twists = [list(first.row_twists)]
    M = first
    limit = max_length if max_length is not None else ring.nvars + 1
    step = 1
    while M.ncols and len(maps) < limit:
        maps.append(M)
        twists.append(list(M.col_twists))
        if linear:
            # generators of the (step+1)-th module have degree <= reg(I) + step
            M = _minimal_kernel(M, reg + step)
        else:
            M = syzygy_matrix(M)
        step += 1
    return Resolution(maps, BettiTable.from_twists(twists))


def betti_table(X) -> BettiTable:
    return minimal_free_resolution(X).betti
