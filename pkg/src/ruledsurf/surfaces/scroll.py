"""Scroll embeddings of P(E) and pullbacks of divisors on the base curve."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from ..core.matrix import RingMatrix
from ..core.ring import Polynomial, PolyRing
from ..groebner.ideal import Ideal, dim_degree, saturate_eliminate
from ..core.linalg import independent_rows
from ..modules import GradedModule, degree_zero_part_presentation
from ..rng import SeedStream
from .curves import CurveModel


@dataclass
class ScrollEmbedding:
    curve: CurveModel
    phi: RingMatrix          # presentation of the module generated in degree 0
    T: PolyRing              # K[y_1..y_n]
    TR: PolyRing             # K[y_1..y_n, x_0..x_m]
    IS: Ideal                # incidence ideal: I_C + entries of y * phi
    ideal: Ideal             # ideal of the scroll in P^{n-1}

    @property
    def r(self) -> int:
        return self.T.nvars - 1

    @property
    def x_block(self) -> list[int]:
        n = self.T.nvars
        return list(range(n, self.TR.nvars))

    def lift(self, f: Polynomial) -> Polynomial:
        """A form on the x side, viewed in TR."""
        n = self.T.nvars
        return self.TR.from_exponents([((0,) * n + tuple(e), c) for e, c in f.lift().exponent_items()])


def scroll_ring(n: int, curve_ring: PolyRing, name: str = "y") -> tuple[PolyRing, PolyRing]:
    T = PolyRing([f"{name}_{i + 1}" for i in range(n)], p=curve_ring.p)
    TR = PolyRing(list(T.names) + list(curve_ring.names), p=curve_ring.p)
    return T, TR


def scroll_ideal(M: GradedModule, C: CurveModel) -> ScrollEmbedding:
    """Ideal of the scroll P(M~) embedded by its degree-0 sections."""
    phi = degree_zero_part_presentation(M)
    n = phi.nrows
    T, TR = scroll_ring(n, C.ring)
    emb = ScrollEmbedding(C, phi, T, TR, None, None)
    gens = [emb.lift(g) for g in C.ideal.gens]
    for j in range(phi.ncols):
        acc = TR.zero()
        for i in range(n):
            e = phi[i, j]
            if e:
                acc = acc + TR.var(i) * emb.lift(e)
        if acc:
            gens.append(acc)
    emb.IS = Ideal(gens, TR)
    # x_m does not vanish on the nondegenerate curve and the incidence
    # correspondence is irreducible, so one variable suffices for the saturation
    emb.ideal = saturate_eliminate(emb.IS, emb.x_block, target=T)
    return emb


def _avoids(Z: Ideal, form: Polynomial) -> bool:
    return dim_degree(Z + Ideal([form], Z.ring))[0] <= 0


def avoiding_form(Z: Ideal, seed: int = 0, tries: int = 20) -> dict[int, int]:
    """Coefficients of a linear form vanishing at no point of the finite scheme Z."""
    R = Z.ring
    n = R.nvars
    cands = [{i: 1} for i in reversed(range(n))]
    cands += [{i: 1, j: 1} for j, i in combinations(reversed(range(n)), 2)]
    stream = SeedStream(seed).child("form")
    for t in range(tries):
        cs = stream.child(str(t)).field_elements(n, R.p)
        cands.append({i: c for i, c in enumerate(cs) if c})
    for coeffs in cands:
        if not coeffs:
            continue
        form = R.zero()
        for i, c in coeffs.items():
            form = form + R.var(i).scale(c)
        if _avoids(Z, form):
            return coeffs
    raise RuntimeError("no linear form avoiding the support")


def pullback_ideal(emb: ScrollEmbedding, I: Ideal) -> Ideal:
    """Ideal in K[y] of the union of the fibres over the scheme V(I) on the curve."""
    R = emb.curve.ring
    I_amb = Ideal([g.lift() for g in I.gens], R) + emb.curve.ideal
    coeffs = avoiding_form(I_amb)
    n = emb.T.nvars
    form = {n + i: c for i, c in coeffs.items()}
    Z = emb.IS + Ideal([emb.lift(g) for g in I.gens], emb.TR)
    return saturate_eliminate(Z, emb.x_block, target=emb.T, form=form)


def quotient_form_basis(A: Ideal, J: Ideal, k: int) -> list[Polynomial]:
    """Forms of degree k in A completing J_k to a basis of A_k."""
    T = A.ring
    Ak = degree_slice(A, k)
    Jk = degree_slice(J, k)
    monos = T.monomials_of_degree(k)
    col = {m.lead_key(): i for i, m in enumerate(monos)}

    def row(f):
        v = [0] * len(monos)
        for key, c in f.terms.items():
            v[col[key]] = c
        return v

    rows = [row(f) for f in Jk] + [row(f) for f in Ak]
    keep = independent_rows(rows, T.p)
    out = [Ak[i - len(Jk)] for i in keep if i >= len(Jk)]
    if not out:
        raise ValueError(f"A_{k} / J_{k} is zero")
    # the first len(rank J_k) rows are J's; anything from A beyond them completes the basis
    return out


def degree_slice(I: Ideal, k: int) -> list[Polynomial]:
    """A K-basis of I_k (echelon form over the monomial basis)."""
    T = I.ring
    monos = T.monomials_of_degree(k)
    spans = []
    for g in I.gens:
        d = g.degree()
        if d > k:
            continue
        for m in T.monomials_of_degree(k - d):
            spans.append(m * g)
    if not spans:
        return []
    from ..core.linalg import row_reduce
    col = {m.lead_key(): i for i, m in enumerate(monos)}
    rows = []
    for f in spans:
        v = [0] * len(monos)
        for key, c in f.terms.items():
            v[col[key]] = c
        rows.append(v)
    red, piv = row_reduce(rows, T.p)
    out = []
    for r in range(len(piv)):
        out.append(T.from_terms({monos[j].lead_key(): int(c) for j, c in enumerate(red[r]) if c}))
    return out
