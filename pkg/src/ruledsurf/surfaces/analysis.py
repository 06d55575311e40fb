"""Invariants of embedded surfaces and the analysis of nets of quadrics."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from ..core.linalg import rank
from ..core.matrix import RingMatrix
from ..core.ring import Polynomial, PolyRing
from ..groebner import hilbert as hb
from ..groebner.ideal import (Ideal, dim_degree, hilbert_values, ideal_quotient, saturate_eliminate,
                              saturation, squarefree_part)
from ..groebner.resolution import BettiTable, minimal_free_resolution
from .curves import is_smooth_plane_curve, smoothness_check


@dataclass
class SurfaceReport:
    dim: int
    degree: int
    betti: BettiTable | None
    hilbert: list[int]
    smooth: bool | None
    normality: list[bool] = field(default_factory=list)
    degenerate: bool = False
    nvars: int = 0

    @property
    def consistent(self) -> bool:
        """Degree from the Hilbert series agrees with the Betti numbers."""
        if self.betti is None or self.degenerate:
            return True
        num: dict[int, int] = {}
        for (i, j), b in self.betti.ranks.items():
            num[j] = num.get(j, 0) + (-1) ** i * b
        return hb.dim_degree_from_numerator(num, self.nvars) == (self.dim, self.degree)

    def as_dict(self) -> dict:
        out = {"dim": self.dim, "degree": self.degree, "hilbert": list(self.hilbert),
               "smooth": self.smooth, "degenerate": self.degenerate}
        if self.betti is not None:
            out["betti_totals"] = self.betti.totals()
            out["betti_rows"] = {str(k): v for k, v in self.betti.rows().items()}
        if self.normality:
            out["normality"] = list(self.normality)
        return out


def surface_report(I: Ideal, tmax: int = 10, smooth: bool = True, betti: bool = True,
                   seed: int = 0) -> SurfaceReport:
    if I.is_unit():
        return SurfaceReport(-1, 0, None, [0] * (tmax + 1), None, degenerate=True)
    d, e = dim_degree(I)
    hv = hilbert_values(I, tmax)
    bt = minimal_free_resolution(I).betti if betti else None
    sm = smoothness_check(I, I.ring.nvars - d, seed=seed) if smooth else None
    return SurfaceReport(d, e, bt, hv, sm, nvars=I.ring.nvars)


@dataclass
class NormalityReport:
    flags: list[bool]
    k0: int

    def first_failure(self) -> int | None:
        return next((k for k, f in enumerate(self.flags) if not f and k > 0), None)


def k_normality_report(I: Ideal, h0_values: Sequence[int], k_max: int) -> NormalityReport:
    """flag k: the degree-k slice of T/I has the dimension h0_values[k]."""
    if len(h0_values) <= k_max:
        raise ValueError(f"need h0 values up to k = {k_max}")
    hv = hilbert_values(I, k_max)
    d, e = dim_degree(I)
    r = I.ring.nvars - 1
    return NormalityReport([hv[k] == h0_values[k] for k in range(k_max + 1)], e - 2 + r)


# -- nets of quadrics -------------------------------------------------------------
def parameter_ring(count: int, p: int) -> PolyRing:
    names = ["a", "b", "c"] if count == 3 else [f"a_{i}" for i in range(count)]
    return PolyRing(names, p=p)


def hessian(f: Polynomial) -> list[list[int]]:
    """Constant Hessian matrix of a quadric."""
    if f.degree() != 2 or not f.is_homogeneous():
        raise ValueError("expected a quadratic form")
    n = f.ring.nvars
    H = [[0] * n for _ in range(n)]
    p = f.ring.p
    for e, c in f.exponent_items():
        idx = [i for i in range(n) for _ in range(e[i])]
        i, j = idx
        if i == j:
            H[i][i] = (H[i][i] + 2 * c) % p
        else:
            H[i][j] = (H[i][j] + c) % p
            H[j][i] = (H[j][i] + c) % p
    return H


def quadric_rank(f: Polynomial) -> int:
    return rank(hessian(f), f.ring.p)


def quadric_net_matrix(quadrics: Sequence[Polynomial], par: PolyRing | None = None) -> RingMatrix:
    """Hessian of sum a_k Q_k: a symmetric matrix of linear forms in the a_k."""
    if not quadrics:
        raise ValueError("no quadrics")
    T = quadrics[0].ring
    par = par or parameter_ring(len(quadrics), T.p)
    hs = [hessian(q) for q in quadrics]
    n = T.nvars
    ent = []
    for i in range(n):
        row = []
        for j in range(n):
            f = par.zero()
            for k, H in enumerate(hs):
                if H[i][j]:
                    f = f + par.var(k).scale(H[i][j])
            row.append(f)
        ent.append(row)
    return RingMatrix(par, ent, [0] * n, [1] * n)


@dataclass
class RankLoci:
    det: Polynomial
    minors5: Ideal
    minors4: Ideal
    saturated5: Ideal
    saturated4: Ideal
    discriminant: Polynomial | None     # squarefree part of det (None when det = 0)


def net_rank_loci(Mmat: RingMatrix) -> RankLoci:
    par = Mmat.ring
    n = Mmat.nrows
    det = Mmat.det()
    m5 = Ideal([g for g in dict.fromkeys(Mmat.minors(n - 1)) if g], par).minimalized()
    m4 = Ideal([g for g in dict.fromkeys(Mmat.minors(n - 2)) if g], par).minimalized()
    s5 = saturation(m5).minimalized() if m5.gens else m5
    s4 = saturation(m4).minimalized() if m4.gens else m4
    disc = squarefree_part(det) if det else None
    return RankLoci(det, m5, m4, s5, s4, disc)


def _product_ring(par: PolyRing, T: PolyRing) -> PolyRing:
    return PolyRing(list(par.names) + list(T.names), p=T.p)


def generic_quadric(quadrics: Sequence[Polynomial], PT: PolyRing, npar: int) -> Polynomial:
    n = quadrics[0].ring.nvars
    out = PT.zero()
    for k, q in enumerate(quadrics):
        out = out + PT.var(k) * PT.convert(q, [npar + i for i in range(n)])
    return out


def _vertex_incidence(quadrics, par):
    T = quadrics[0].ring
    npar = par.nvars
    PT = _product_ring(par, T)
    gq = generic_quadric(quadrics, PT, npar)
    gens = [gq] + [gq.derivative(npar + i) for i in range(T.nvars)]
    return PT, Ideal([g for g in gens if g], PT)


def vertex_locus(quadrics: Sequence[Polynomial], G: Ideal, J: Ideal | None = None) -> tuple[Ideal, Ideal | None]:
    """Union in P^r of the vertices of the quadrics parametrised by V(G), and
    (if J is given) its intersection with V(J)."""
    par = G.ring
    T = quadrics[0].ring
    PT, inc = _vertex_incidence(quadrics, par)
    npar = par.nvars
    inc = inc + Ideal([PT.convert(g, list(range(npar))) for g in G.gens], PT)
    Y = saturate_eliminate(inc, range(npar), target=T, certify=True)
    Y = saturation(Y).minimalized()
    V = (Y + J).minimalized() if J is not None else None
    return Y, V


def vertices_on_surface(quadrics: Sequence[Polynomial], J: Ideal, par: PolyRing | None = None) -> Ideal:
    """Parameters of the quadrics of the net whose vertex lies on V(J)."""
    T = quadrics[0].ring
    par = par or parameter_ring(len(quadrics), T.p)
    PT, inc = _vertex_incidence(quadrics, par)
    npar = par.nvars
    inc = inc + Ideal([PT.convert(g, [npar + i for i in range(T.nvars)]) for g in J.gens], PT)
    G = saturate_eliminate(inc, range(npar, PT.nvars), target=par, certify=True)
    return saturation(G).minimalized()


def singular_locus_of_quadric(Q: Polynomial) -> Ideal:
    T = Q.ring
    sing = Ideal([Q] + [Q.derivative(i) for i in range(T.nvars) if Q.derivative(i)], T)
    return saturation(sing).minimalized()


# -- curves on the surface ------------------------------------------------------------
def directrix(H: Ideal, J: Ideal) -> Ideal:
    """(h + J) : H for the linear form h in H; for H the fibres over a divisor
    in a hyperplane class this is the residual curve of the hyperplane section."""
    lin = [g for g in H.mingens() if g.degree() == 1]
    if not lin:
        raise ValueError("the fibre ideal contains no linear form")
    return ideal_quotient(Ideal([lin[0]], J.ring) + J, H).minimalized()


def linear_span_dimension(I: Ideal) -> int:
    """Projective dimension of the linear span of V(I) (saturated I)."""
    lin = [g for g in I.mingens() if g.degree() == 1]
    T = I.ring
    rows = []
    for g in lin:
        v = [0] * T.nvars
        for e, c in g.exponent_items():
            v[e.index(1)] = c
        rows.append(v)
    return T.nvars - 1 - (rank(rows, T.p) if rows else 0)


def is_smooth_plane_cubic(I: Ideal) -> bool:
    """V(I) is a smooth cubic curve spanning a plane."""
    T = I.ring
    gens = I.mingens()
    lin = [g for g in gens if g.degree() == 1]
    rest = [g for g in gens if g.degree() != 1]
    if len(lin) != T.nvars - 3 or len(rest) != 1 or rest[0].degree() != 3:
        return False
    if dim_degree(I) != (2, 3):
        return False
    return smoothness_check(I, T.nvars - 2)


def planes_disjoint(A: Ideal, B: Ideal) -> bool:
    """The linear spans of V(A) and V(B) do not meet."""
    T = A.ring
    lin = [g for g in A.mingens() if g.degree() == 1] + [g for g in B.mingens() if g.degree() == 1]
    rows = []
    for g in lin:
        v = [0] * T.nvars
        for e, c in g.exponent_items():
            v[e.index(1)] = c
        rows.append(v)
    return bool(rows) and rank(rows, T.p) == T.nvars


def radical_equals(V: Ideal, P: Ideal, max_power: int = 4) -> bool:
    """rad(V) = P for a prime P: V is inside P and some power of P lies in sat(V)."""
    if not V.is_subset(P):
        return False
    Vs = saturation(V)
    Pk = P
    for _ in range(max_power):
        if Pk.is_subset(Vs):
            return True
        Pk = (Pk * P).minimalized()
    return False


__all__ = [
    "SurfaceReport", "surface_report", "NormalityReport", "k_normality_report", "hessian",
    "quadric_rank", "quadric_net_matrix", "RankLoci", "net_rank_loci", "vertex_locus",
    "vertices_on_surface", "singular_locus_of_quadric", "directrix", "linear_span_dimension",
    "is_smooth_plane_cubic", "planes_disjoint", "radical_equals", "is_smooth_plane_curve",
]
