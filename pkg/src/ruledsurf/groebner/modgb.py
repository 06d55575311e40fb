"""Submodules of graded free modules over a (quotient) polynomial ring."""

from __future__ import annotations

from typing import Sequence

from ..core.matrix import RingMatrix
from ..core.ring import Polynomial, PolyRing
from .engine import GBResult, ModuleLayout, Reducer, buchberger

Vector = Sequence[Polynomial]


def layout_for(ring: PolyRing, twists: Sequence[int]) -> ModuleLayout:
    return ModuleLayout(ring.mono, len(twists), twists)


def vec_to_terms(layout: ModuleLayout, vec: Vector) -> dict:
    out = {}
    for pos, f in enumerate(vec):
        if f:
            top = (layout.rank - 1 - pos) << layout.shift
            for k, c in f.terms.items():
                out[top | k] = c
    return out


def terms_to_vec(ring: PolyRing, layout: ModuleLayout, d: dict, reduce: bool = False) -> list[Polynomial]:
    parts: list[dict] = [{} for _ in range(layout.rank)]
    mask = layout.monomask
    for k, c in d.items():
        parts[layout.pos(k)][k & mask] = c
    if reduce:
        return [ring.from_terms(t) for t in parts]
    return [Polynomial(ring, t) for t in parts]


def relation_vectors(ring: PolyRing, layout: ModuleLayout, positions: Sequence[int] | None = None) -> list[dict]:
    """The defining relations of ``ring`` placed in each basis position."""
    if not ring.relations:
        return []
    positions = range(layout.rank) if positions is None else positions
    out = []
    for pos in positions:
        top = (layout.rank - 1 - pos) << layout.shift
        for r in ring.relations:
            out.append({top | k: c for k, c in r.terms.items()})
    return out


class SubmoduleGB:
    """Gröbner basis of a submodule of a free module over ``ring``."""

    def __init__(self, ring: PolyRing, twists: Sequence[int], vectors: Sequence[Vector],
                 max_degree: int | None = None):
        self.ring = ring
        self.twists = tuple(twists)
        self.layout = layout_for(ring, twists)
        gens = [vec_to_terms(self.layout, v) for v in vectors]
        self.result: GBResult = buchberger(self.layout, ring.p, gens,
                                           relation_vectors(ring, self.layout), max_degree)
        self._reducer: Reducer | None = None

    @property
    def reducer(self) -> Reducer:
        if self._reducer is None:
            self._reducer = self.result.reducer()
        return self._reducer

    def normal_form(self, vec: Vector) -> list[Polynomial]:
        d = self.reducer.reduce(vec_to_terms(self.layout, vec))
        return terms_to_vec(self.ring, self.layout, d)

    def normal_form_terms(self, d: dict) -> dict:
        return self.reducer.reduce(d)

    def minimal_generators(self) -> list[list[Polynomial]]:
        out = []
        for _, rem in self.result.minimal:
            lc = rem[max(rem)]
            inv = pow(lc, -1, self.ring.p)
            out.append(terms_to_vec(self.ring, self.layout, {k: c * inv % self.ring.p for k, c in rem.items()}))
        return out

    def leading_monomials(self) -> list[tuple[int, tuple[int, ...]]]:
        return self.result.leading_exponents()

    def numerator(self) -> dict:
        """Hilbert numerator of the quotient F / U as {degree: coeff}."""
        from .hilbert import numerator
        by_pos: dict[int, list] = {i: [] for i in range(len(self.twists))}
        for pos, e in self.leading_monomials():
            by_pos[pos].append(e)
        grading = [(w,) for w in self.ring.weights]
        total: dict = {}
        for pos, monos in by_pos.items():
            n = numerator(monos, grading)
            for (d,), c in n.items():
                k = d + self.twists[pos]
                total[k] = total.get(k, 0) + c
        return {k: c for k, c in total.items() if c}


def module_mingens(ring: PolyRing, twists: Sequence[int], vectors: Sequence[Vector]) -> list[list[Polynomial]]:
    vecs = [v for v in vectors if any(v)]
    if not vecs:
        return []
    layout = layout_for(ring, twists)
    top = max(layout.vector_degree(vec_to_terms(layout, v)) for v in vecs)
    return SubmoduleGB(ring, twists, vecs, max_degree=top).minimal_generators()


def vector_degree(ring: PolyRing, twists: Sequence[int], vec: Vector) -> int:
    layout = layout_for(ring, twists)
    return layout.vector_degree(vec_to_terms(layout, vec))


def matrix_from_vectors(ring: PolyRing, twists: Sequence[int], vecs: Sequence[Vector]) -> RingMatrix:
    degs = [vector_degree(ring, twists, v) for v in vecs]
    return RingMatrix.from_columns(ring, vecs, twists, degs)


def syzygy_matrix(M: RingMatrix, minimal: bool = True) -> RingMatrix:
    """Matrix whose columns generate the syzygies of the columns of ``M``."""
    ring = M.ring
    r, s = M.shape
    if not M.is_homogeneous():
        from .engine import InhomogeneousError
        raise InhomogeneousError("syzygies need a homogeneous matrix")
    twists = tuple(M.row_twists) + tuple(M.col_twists)
    layout = layout_for(ring, twists)
    one = ring.one()
    zero = ring.zero()
    gens = []
    for j in range(s):
        vec = M.column(j) + [one if t == j else zero for t in range(s)]
        gens.append(vec_to_terms(layout, vec))
    res = buchberger(layout, ring.p, gens, relation_vectors(ring, layout))
    syz = []
    for e in res.elems:
        if e.pos >= r and not e.rel:
            v = terms_to_vec(ring, layout, e.as_dict())[r:]
            syz.append(v)
    if minimal:
        syz = module_mingens(ring, M.col_twists, syz)
    return matrix_from_vectors(ring, M.col_twists, syz) if syz else RingMatrix.zeros(ring, M.col_twists, [])
