"""Finitely presented graded modules over S = R/I.

A module is the cokernel of its presentation matrix: rows are generators
(row twist = generator degree), columns are relations.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

from .core.linalg import nullspace
from .core.matrix import RingMatrix
from .core.orders import monomials_of_degree
from .core.ring import Polynomial, PolyRing
from .groebner import hilbert as hb
from .groebner.ideal import Ideal, ideal_quotient
from .groebner.modgb import (SubmoduleGB, matrix_from_vectors, module_mingens, syzygy_matrix,
                             terms_to_vec, vec_to_terms)
from .errors import PreconditionError
from .rng import SeedStream


class GradedModule:
    def __init__(self, presentation: RingMatrix):
        if not presentation.is_homogeneous():
            raise ValueError("presentation is not homogeneous")
        self.presentation = presentation
        self.ring: PolyRing = presentation.ring
        self._gb: SubmoduleGB | None = None

    @classmethod
    def free(cls, ring: PolyRing, twists: Sequence[int]) -> "GradedModule":
        return cls(RingMatrix.zeros(ring, twists, []))

    @property
    def twists(self) -> tuple[int, ...]:
        return self.presentation.row_twists

    @property
    def num_generators(self) -> int:
        return self.presentation.nrows

    def gb(self) -> SubmoduleGB:
        if self._gb is None:
            self._gb = SubmoduleGB(self.ring, self.twists, self.presentation.columns())
        return self._gb

    def numerator(self) -> dict:
        return self.gb().numerator()

    def hilbert_function(self, t: int) -> int:
        n = self.numerator()
        return hb.series({(k,): c for k, c in n.items()}, self.ring.weights, t, t)[t]

    def hilbert_values(self, lo: int, hi: int) -> list[int]:
        n = self.numerator()
        s = hb.series({(k,): c for k, c in n.items()}, self.ring.weights, hi, lo)
        return [s[t] for t in range(lo, hi + 1)]

    def normal_form(self, vec: Sequence[Polynomial]) -> list[Polynomial]:
        return self.gb().normal_form(vec)

    def basis(self, d: int) -> list[list[Polynomial]]:
        """Standard vectors spanning the degree-d slice (a K-basis)."""
        gb = self.gb()
        red = gb.reducer
        lay = gb.layout
        amb = self.ring.ambient
        out = []
        for pos, tw in enumerate(self.twists):
            e = d - tw
            if e < 0:
                continue
            keys = sorted((amb.mono.encode(x) for x in monomials_of_degree(amb.nvars, e, amb.weights)),
                          reverse=True)
            for k in keys:
                mk = lay.key(pos, k)
                if red.find(mk) is None:
                    out.append(terms_to_vec(self.ring, lay, {mk: 1}))
        return out

    def is_zero_in_degree(self, d: int) -> bool:
        return not self.basis(d)

    def __repr__(self):
        return f"GradedModule({self.num_generators} generators, twists={list(self.twists)}, {self.presentation.ncols} relations)"


def block_matrix(ring: PolyRing, blocks: list[list[RingMatrix]]) -> RingMatrix:
    rows = None
    for brow in blocks:
        acc = brow[0]
        for m in brow[1:]:
            acc = acc.hstack(m)
        rows = acc if rows is None else rows.vstack(acc)
    return rows


def direct_sum(A: GradedModule, B: GradedModule) -> GradedModule:
    if A.ring != B.ring:
        raise ValueError("modules over different rings")
    pa, pb = A.presentation, B.presentation
    top = pa.hstack(RingMatrix.zeros(A.ring, pa.row_twists, pb.col_twists))
    bot = RingMatrix.zeros(A.ring, pb.row_twists, pa.col_twists).hstack(pb)
    return GradedModule(top.vstack(bot))


def dual_of_divisor_ideal(I_D: Ideal) -> GradedModule:
    """Hom_S(I_D, S) presented as (f) : I_D shifted by deg f."""
    S = I_D.ring
    if not I_D.gens:
        raise ValueError("dual of the zero ideal")
    if I_D.is_unit():
        return GradedModule.free(S, [0])
    gens = sorted(I_D.mingens(), key=lambda g: g.degree())
    f = gens[0]
    df = f.degree()
    J = ideal_quotient(Ideal([f], S), I_D)
    jg = list(J.mingens())
    syz = syzygy_matrix(RingMatrix(S, [jg], [0]))
    rt = [g.degree() - df for g in jg]
    ct = [t - df for t in syz.col_twists]
    return GradedModule(RingMatrix(S, syz.entries, rt, ct, ncols=syz.ncols))


def _solve_homs(A: GradedModule, B: GradedModule):
    """Parametrised degree-0 homs image(phi_a) -> coker(phi_b)."""
    S = A.ring
    p = S.p
    phia = A.presentation
    gbB = B.gb()
    lay = gbB.layout
    red = gbB.reducer
    # parameters: column j of eta is a combination of basis vectors of B in degree ct_a(j)
    params = []  # (column j, basis vector terms)
    cache: dict[int, list[dict]] = {}
    for j, d in enumerate(phia.col_twists):
        if d not in cache:
            cache[d] = [vec_to_terms(lay, v) for v in B.basis(d)]
        for v in cache[d]:
            params.append((j, v))
    syz = syzygy_matrix(phia) if phia.ncols else RingMatrix.zeros(S, [], [])
    rows: dict[tuple[int, int], dict[int, int]] = {}
    for s_idx in range(syz.ncols):
        col = syz.column(s_idx)
        for u, (j, v) in enumerate(params):
            sj = col[j]
            if not sj:
                continue
            prod: dict = {}
            for k, c in v.items():
                for mk, mc in sj.terms.items():
                    nk = k + mk - S.mono.one
                    prod[nk] = (prod.get(nk, 0) + c * mc) % p
            prod = {k: c for k, c in prod.items() if c}
            nf = red.reduce(prod)
            for k, c in nf.items():
                rows.setdefault((s_idx, k), {})[u] = c
    n = len(params)
    mat = np.zeros((len(rows), n), dtype=np.int64)
    for r, (_, entries) in enumerate(sorted(rows.items())):
        for u, c in entries.items():
            mat[r, u] = c
    ns = nullspace(mat, p, ncols=n) if n else np.zeros((0, 0), dtype=np.int64)
    return params, ns


def _eta_from(A: GradedModule, B: GradedModule, params, coeffs) -> RingMatrix:
    S = A.ring
    lay = B.gb().layout
    nrows, ncols = B.num_generators, A.presentation.ncols
    p = S.p
    cols: list[dict] = [{} for _ in range(ncols)]
    for (j, v), c in zip(params, coeffs):
        c = int(c) % p
        if not c:
            continue
        for k, vc in v.items():
            cols[j][k] = (cols[j].get(k, 0) + c * vc) % p
    vecs = [terms_to_vec(S, lay, {k: c for k, c in d.items() if c}) for d in cols]
    ent = [[vecs[j][i] for j in range(ncols)] for i in range(nrows)]
    return RingMatrix(S, ent, B.twists, A.presentation.col_twists, ncols=ncols)


def hom_basis(A: GradedModule, B: GradedModule) -> list[RingMatrix]:
    """K-basis of degree-0 homomorphisms image(phi_a) -> coker(phi_b)."""
    if A.ring != B.ring:
        raise ValueError("modules over different rings")
    params, ns = _solve_homs(A, B)
    return [_eta_from(A, B, params, row) for row in ns]


def random_extension(A: GradedModule, B: GradedModule, seed: int | SeedStream = 0,
                     homs: list[RingMatrix] | None = None) -> GradedModule:
    """Cokernel of [[phi_a, 0], [phi_ab, phi_b]] with phi_ab random in the hom space."""
    stream = seed if isinstance(seed, SeedStream) else SeedStream(seed)
    S = A.ring
    if homs is None:
        homs = hom_basis(A, B)
    pa, pb = A.presentation, B.presentation
    phiab = RingMatrix.zeros(S, pb.row_twists, pa.col_twists)
    coeffs = stream.field_elements(len(homs), S.p)
    for c, eta in zip(coeffs, homs):
        phiab = phiab + eta.scale(int(c))
    return extension_from(A, B, phiab)


def extension_from(A: GradedModule, B: GradedModule, phiab: RingMatrix) -> GradedModule:
    S = A.ring
    pa, pb = A.presentation, B.presentation
    top = pa.hstack(RingMatrix.zeros(S, pa.row_twists, pb.col_twists))
    bot = phiab.hstack(pb)
    return GradedModule(top.vstack(bot))


def prune_presentation(M: GradedModule) -> GradedModule:
    """Cancel unit entries, then minimise the relations."""
    pres = M.presentation
    S = M.ring
    p = S.p
    ent = [list(r) for r in pres.entries]
    rt = list(pres.row_twists)
    ct = list(pres.col_twists)
    while True:
        hit = None
        for j in range(len(ct)):
            for i in range(len(rt)):
                e = ent[i][j]
                if e and e.is_constant():
                    hit = (i, j)
                    break
            if hit:
                break
        if hit is None:
            break
        i, j = hit
        inv = pow(ent[i][j].constant_value(), -1, p)
        for k in range(len(ct)):
            if k == j or not ent[i][k]:
                continue
            factor = ent[i][k] * inv
            for r in range(len(rt)):
                if ent[r][j]:
                    ent[r][k] = ent[r][k] - factor * ent[r][j]
        del rt[i]
        ent.pop(i)
        del ct[j]
        for r in ent:
            r.pop(j)
    cols = [[ent[i][j] for i in range(len(rt))] for j in range(len(ct))]
    cols = module_mingens(S, rt, cols) if rt else []
    if not cols:
        return GradedModule(RingMatrix.zeros(S, rt, []))
    return GradedModule(matrix_from_vectors(S, rt, cols))


def degree_zero_part_presentation(M: GradedModule) -> RingMatrix:
    """Presentation of the submodule generated by a K-basis of M_0."""
    S = M.ring
    basis = M.basis(0)
    if not basis:
        raise PreconditionError("the degree-0 part of the module is zero")
    n = len(basis)
    pres = M.presentation
    big = RingMatrix.from_columns(S, basis, pres.row_twists, [0] * n).hstack(pres)
    syz = syzygy_matrix(big, minimal=False)
    vecs = [syz.column(j)[:n] for j in range(syz.ncols)]
    vecs = module_mingens(S, [0] * n, vecs)
    if not vecs:
        return RingMatrix.zeros(S, [0] * n, [])
    return matrix_from_vectors(S, [0] * n, vecs)


def degree_zero_submodule(M: GradedModule) -> GradedModule:
    return GradedModule(degree_zero_part_presentation(M))
