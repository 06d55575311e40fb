"""Homogeneous Buchberger algorithm for submodules of graded free modules.

Vectors are dictionaries mapping a *module key* to a coefficient.  A module key
is ``(rank - 1 - position) << bits | monomial_key`` so integer comparison is the
position-over-term order with position 0 largest.  For rank one the module
key is the monomial key itself.

The algorithm runs degree by degree: within a degree it first takes the
inputs marked as relations, then the S-pairs, then the remaining generators.
Generators that survive reduction are exactly a minimal generating set of
the submodule modulo the relations, which is how ``mingens`` is obtained.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..core.orders import MonomialOrder


class InhomogeneousError(ValueError):
    pass


class ModuleLayout:
    __slots__ = ("mono", "rank", "twists", "shift", "monomask")

    def __init__(self, mono: MonomialOrder, rank: int = 1, twists: Sequence[int] | None = None):
        self.mono = mono
        self.rank = rank
        self.twists = tuple(twists) if twists is not None else (0,) * rank
        if len(self.twists) != rank:
            raise ValueError("one twist per position required")
        self.shift = mono.bits
        self.monomask = (1 << mono.bits) - 1

    def key(self, pos: int, monokey: int) -> int:
        return ((self.rank - 1 - pos) << self.shift) | monokey

    def pos(self, key: int) -> int:
        return self.rank - 1 - (key >> self.shift)

    def monokey(self, key: int) -> int:
        return key & self.monomask

    def degree(self, key: int) -> int:
        return self.mono.degree(key & self.monomask) + self.twists[self.rank - 1 - (key >> self.shift)]

    def vector_degree(self, vec: dict) -> int:
        """Degree of a homogeneous vector; raises if it is not homogeneous."""
        degs = {self.degree(k) for k in vec}
        if len(degs) != 1:
            raise InhomogeneousError(f"inhomogeneous vector (degrees {sorted(degs)})")
        return degs.pop()


class Elem:
    __slots__ = ("lead", "tail", "pos", "deg", "lexps", "rel", "idx")

    def __init__(self, terms: dict, layout: ModuleLayout, p: int, rel: bool = False):
        lead = max(terms)
        inv = pow(terms[lead], -1, p)
        keys = sorted(terms, reverse=True)
        self.lead = lead
        self.tail = [(k, terms[k] * inv % p) for k in keys[1:]]
        self.pos = layout.pos(lead)
        self.deg = layout.degree(lead)
        self.lexps = layout.mono.decode(lead & layout.monomask)
        self.rel = rel
        self.idx = -1

    def as_dict(self) -> dict:
        d = {self.lead: 1}
        d.update(self.tail)
        return d


class Reducer:
    """Division by a fixed or growing list of monic vectors."""

    def __init__(self, ring_or_layout, basis: Iterable[dict] | Iterable[Elem] = (), p: int | None = None):
        if isinstance(ring_or_layout, ModuleLayout):
            self.layout = ring_or_layout
            self.p = p
        else:
            self.layout = ModuleLayout(ring_or_layout.mono)
            self.p = ring_or_layout.p
        lay = self.layout
        self.guard = lay.mono.guard
        self.expmask = lay.mono.expmask
        self.elems: list[Elem] = []
        self.by_slot: dict[int, list[tuple[int, Elem]]] = {}
        self.hit: dict[int, Elem] = {}
        self.miss: set[int] = set()
        for b in basis:
            self.add(b if isinstance(b, Elem) else Elem(b, lay, self.p))

    def add(self, e: Elem) -> None:
        e.idx = len(self.elems)
        self.elems.append(e)
        self.by_slot.setdefault(e.lead >> self.layout.shift, []).append((e.lead, e))
        self.miss.clear()

    def find(self, k: int) -> Elem | None:
        e = self.hit.get(k)
        if e is not None:
            return e
        if k in self.miss:
            return None
        g = self.guard
        probe = k & self.expmask
        for lead, e in self.by_slot.get(k >> self.layout.shift, ()):
            if ((lead | g) - probe) & g == g:
                self.hit[k] = e
                return e
        self.miss.add(k)
        return None

    def is_reducible(self, k: int) -> bool:
        return self.find(k) is not None

    def reduce(self, f: dict) -> dict:
        """Full reduction: the result has no term divisible by a leading term."""
        if not f:
            return {}
        p = self.p
        f = dict(f)
        heap = [-k for k in f]
        heapq.heapify(heap)
        pop, push = heapq.heappop, heapq.heappush
        find = self.find
        out = {}
        while heap:
            k = -pop(heap)
            c = f.pop(k, None)
            if c is None:
                continue
            e = find(k)
            if e is None:
                out[k] = c
                continue
            shift = k - e.lead
            get = f.get
            for gk, gc in e.tail:
                nk = gk + shift
                old = get(nk)
                if old is None:
                    f[nk] = (-c * gc) % p
                    push(heap, -nk)
                else:
                    v = (old - c * gc) % p
                    if v:
                        f[nk] = v
                    else:
                        del f[nk]
        return out

    def reduce_top(self, f: dict) -> dict:
        """Reduce until the leading term is irreducible (tail untouched)."""
        if not f:
            return {}
        p = self.p
        f = dict(f)
        heap = [-k for k in f]
        heapq.heapify(heap)
        find = self.find
        while heap:
            k = -heap[0]
            c = f.get(k)
            if c is None:
                heapq.heappop(heap)
                continue
            e = find(k)
            if e is None:
                return f
            heapq.heappop(heap)
            del f[k]
            shift = k - e.lead
            for gk, gc in e.tail:
                nk = gk + shift
                old = f.get(nk)
                if old is None:
                    f[nk] = (-c * gc) % p
                    heapq.heappush(heap, -nk)
                else:
                    v = (old - c * gc) % p
                    if v:
                        f[nk] = v
                    else:
                        del f[nk]
        return f


@dataclass
class GBResult:
    layout: ModuleLayout
    p: int
    elems: list[Elem]
    minimal: list[tuple[int, dict]] = field(default_factory=list)  # (input index, remainder)
    complete: bool = True
    max_degree: int | None = None

    def vectors(self) -> list[dict]:
        return [e.as_dict() for e in self.elems]

    def reducer(self) -> Reducer:
        return Reducer(self.layout, self.elems, self.p)

    def leading_exponents(self) -> list[tuple[int, tuple[int, ...]]]:
        return [(e.pos, e.lexps) for e in self.elems]


def _lcm_exps(a: tuple, b: tuple) -> tuple:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def buchberger(layout: ModuleLayout, p: int, gens: Sequence[dict],
               relations: Sequence[dict] = (), max_degree: int | None = None,
               relations_are_gb: bool = True, interreduce: bool = True) -> GBResult:
    """Gröbner basis of the submodule generated by ``relations`` and ``gens``.

    ``relations`` are taken first in each degree and, when
    ``relations_are_gb``, pairs between two untouched relations are skipped
    (they already form a Gröbner basis, e.g. an ideal Gröbner basis times each
    basis vector).  ``result.minimal`` lists the generators whose remainder was
    nonzero, i.e. a minimal generating set modulo the relations.
    """
    mono = layout.mono
    shift = layout.shift
    encode = mono.encode
    is_ideal = layout.rank == 1
    red = Reducer(layout, (), p)
    inputs = []
    for i, r in enumerate(relations):
        if r:
            inputs.append((layout.vector_degree(r), 0, i, r))
    for i, g in enumerate(gens):
        if g:
            inputs.append((layout.vector_degree(g), 1, i, g))
    inputs.sort(key=lambda t: (t[0], t[1], t[2]))

    pairs: list[tuple[int, int, int, int]] = []  # (deg, lcm key, i, j)
    minimal: list[tuple[int, dict]] = []
    elems = red.elems
    guard = mono.guard
    expmask = mono.expmask

    def divides(a: int, b: int) -> bool:
        return ((a | guard) - (b & expmask)) & guard == guard

    def lcm_key(e: Elem, f: Elem) -> int:
        return ((layout.rank - 1 - e.pos) << shift) | encode(_lcm_exps(e.lexps, f.lexps))

    def coprime(e: Elem, f: Elem) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(e.lexps, f.lexps))

    def add(e: Elem) -> None:
        nonlocal pairs
        red.add(e)
        h = e.idx
        cands = []
        for f in red.by_slot.get(e.lead >> shift, ()):
            g = f[1]
            if g.idx == h:
                continue
            cands.append((lcm_key(g, e), g))
        lcm_with = {g.idx: L for L, g in cands}
        # Gebauer-Möller, new pairs
        kept = []
        for n, (L, g) in enumerate(cands):
            cp = is_ideal and coprime(g, e)
            if not cp:
                dominated = False
                for m, (L2, g2) in enumerate(cands):
                    if m > n and divides(L2, L):
                        dominated = True
                        break
                if not dominated:
                    for L2, g2, _ in kept:
                        if divides(L2, L):
                            dominated = True
                            break
                if dominated:
                    continue
            kept.append((L, g, cp))
        # prune old pairs
        lead = e.lead
        slot = lead >> shift
        survivors = []
        for pr in pairs:
            d, L, i, j = pr
            if (L >> shift) == slot and divides(lead, L):
                li, lj = lcm_with.get(i), lcm_with.get(j)
                if li != L and lj != L:
                    continue
            survivors.append(pr)
        for L, g, cp in kept:
            if cp or (g.rel and e.rel):
                continue
            hi, lo = (h, g.idx)
            survivors.append((layout.degree(L), L, lo, hi))
        pairs = survivors

    def spoly(i: int, j: int, L: int) -> dict:
        a, b = elems[i], elems[j]
        sa, sb = L - a.lead, L - b.lead
        f = {}
        for k, c in a.tail:
            f[k + sa] = c
        for k, c in b.tail:
            nk = k + sb
            v = (f.get(nk, 0) - c) % p
            if v:
                f[nk] = v
            else:
                f.pop(nk, None)
        return f

    ptr = 0
    complete = True
    while True:
        dp = min((pr[0] for pr in pairs), default=None)
        di = inputs[ptr][0] if ptr < len(inputs) else None
        cands = [x for x in (dp, di) if x is not None]
        if not cands:
            break
        d = min(cands)
        if max_degree is not None and d > max_degree:
            complete = False
            break
        while ptr < len(inputs) and inputs[ptr][0] == d and inputs[ptr][1] == 0:
            r = inputs[ptr][3]
            ptr += 1
            if not red.is_reducible(max(r)):
                add(Elem(r, layout, p, rel=relations_are_gb))
            else:
                rem = red.reduce(r)
                if rem:
                    add(Elem(rem, layout, p))
        batch = sorted(pr for pr in pairs if pr[0] == d)
        if batch:
            pairs = [pr for pr in pairs if pr[0] != d]
            for _, L, i, j in batch:
                s = spoly(i, j, L)
                if not s:
                    continue
                rem = red.reduce(s)
                if rem:
                    add(Elem(rem, layout, p))
        while ptr < len(inputs) and inputs[ptr][0] == d:
            _, kind, i, g = inputs[ptr]
            ptr += 1
            rem = red.reduce(g)
            if rem:
                if kind == 1:
                    minimal.append((i, rem))
                add(Elem(rem, layout, p))

    if interreduce:
        for e in sorted(elems, key=lambda x: x.lead):
            if e.tail:
                t = red.reduce(dict(e.tail))
                e.tail = sorted(t.items(), reverse=True)
    out = sorted(elems, key=lambda x: x.lead)
    return GBResult(layout, p, out, minimal, complete, max_degree)


def groebner_basis_raw(ring, gens: Sequence[dict]) -> list[dict]:
    """Reduced Gröbner basis of an ideal in a relation-free ring."""
    res = buchberger(ModuleLayout(ring.mono), ring.p, [g for g in gens if g])
    return res.vectors()


def reduced_from_gb(layout: ModuleLayout, p: int, vectors: Sequence[dict]) -> GBResult:
    """Reduced basis from vectors already known to form a Gröbner basis."""
    elems = sorted((Elem(v, layout, p) for v in vectors if v), key=lambda e: e.lead)
    red = Reducer(layout, (), p)
    kept = []
    for e in elems:
        if red.find(e.lead) is None:
            red.add(e)
            kept.append(e)
    for e in kept:
        if e.tail:
            e.tail = sorted(red.reduce(dict(e.tail)).items(), reverse=True)
    return GBResult(layout, p, kept)
