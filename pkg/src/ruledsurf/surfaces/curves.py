"""Curves, rational points and divisors."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

from ..core.field import DEFAULT_PRIME
from ..core.matrix import RingMatrix, jacobian_matrix
from ..core.ring import Polynomial, PolyRing
from ..groebner.ideal import (Ideal, dim_degree, eliminate, intersect_all,
                              poly_gcd)
from ..groebner.modgb import syzygy_matrix
from ..groebner.univariate import univariate_roots
from ..errors import RetryBudgetExceeded
from ..rng import SeedStream


@dataclass
class CurveModel:
    ring: PolyRing          # ambient K[x_0..x_m]
    ideal: Ideal            # saturated ideal of C
    genus: int
    degree: int
    seed: int | None = None
    _S: PolyRing | None = None

    @property
    def ambient_dim(self) -> int:
        return self.ring.nvars - 1

    @property
    def S(self) -> PolyRing:
        """Coordinate ring R / I_C."""
        if self._S is None:
            self._S = self.ring.quotient(self.ideal.gens)
        return self._S

    def to_S(self, I: Ideal) -> Ideal:
        return Ideal([self.S.from_terms(g.terms) for g in I.gens], self.S)


@dataclass
class DivisorRep:
    ideal: Ideal            # saturated ideal of the points, in the ambient ring
    degree: int
    points: tuple = ()


def coordinate_ring(n: int, p: int = DEFAULT_PRIME, name: str = "x") -> PolyRing:
    return PolyRing([f"{name}_{i}" for i in range(n)], p=p)


# -- smoothness ---------------------------------------------------------------
def _degree_classes(gens: Sequence[Polynomial]) -> dict[int, list[int]]:
    classes: dict[int, list[int]] = {}
    for j, g in enumerate(gens):
        classes.setdefault(g.degree(), []).append(j)
    return classes


def _random_minor(jac: RingMatrix, classes, pat, size, stream, ring) -> Polynomial:
    p = ring.p
    n = ring.nvars
    A = [stream.field_elements(n, p) for _ in range(size)]
    Bs = [stream.field_elements(len(classes[d]), p) for d in pat]
    rows = []
    for a in range(size):
        row = []
        for col, d in enumerate(pat):
            acc = ring.zero()
            for b, j in zip(Bs[col], classes[d]):
                if not b:
                    continue
                for i in range(n):
                    ai = A[a][i]
                    e = jac[i, j]
                    if ai and e:
                        acc = acc + e * (ai * b % p)
            row.append(acc)
        rows.append(row)
    return RingMatrix(ring, rows, [0] * size).det()


def smoothness_check(I: Ideal, codim: int | None = None, seed: int = 0, samples: int | None = None,
                     full_fallback: bool = True) -> bool:
    """True iff V(I + (codim x codim Jacobian minors)) is empty in projective space."""
    ring = I.ring
    gens = list(I.mingens())
    if codim is None:
        d, _ = dim_degree(I)
        codim = ring.nvars - d
    if codim == 0:
        return True
    stream = SeedStream(seed).child("smooth")
    jac = jacobian_matrix(gens)
    classes = _degree_classes(gens)
    patterns = [pat for pat in combinations_with_replacement(sorted(classes), codim)
                if all(pat.count(d) <= len(classes[d]) for d in set(pat))]
    if samples is None:
        samples = ring.nvars + 2
    mins = [_random_minor(jac, classes, patterns[t % len(patterns)], codim, stream, ring)
            for t in range(samples)]
    test = Ideal(gens + [m for m in mins if m], ring)
    if dim_degree(test)[0] <= 0:
        return True
    if not full_fallback:
        return False
    full = Ideal(gens + [m for m in dict.fromkeys(jac.minors(codim)) if m], ring)
    return dim_degree(full)[0] <= 0


# -- curve generators ---------------------------------------------------------------
def random_genus2_curve(seed: int = 0, p: int = DEFAULT_PRIME, retries: int = 20,
                        ring: PolyRing | None = None) -> CurveModel:
    """Smooth genus-2 quintic in P^3 from a random 9x8 mapping cone matrix."""
    R = ring or coordinate_ring(4, p)
    stream = SeedStream(seed).child("genus2")
    x = R.gens()
    zero = R.zero()
    for attempt in range(retries):
        st = stream.child(f"try{attempt}")
        ent = []
        for i in range(8):
            consts = st.field_elements(6, p)
            row = [R.constant(c) for c in consts]
            row += [x[i], zero] if i < 4 else [zero, x[i - 4]]
            ent.append(row)
        lin = []
        for _ in range(6):
            lin.append(R.from_exponents([(tuple(1 if k == i else 0 for k in range(4)), c)
                                         for i, c in enumerate(st.field_elements(4, p))]))
        ent.append(lin + [zero, zero])
        cone = RingMatrix(R, ent, [1] * 8 + [0], [1] * 6 + [2, 2])
        syz = syzygy_matrix(cone.transpose())
        entries = [e for col in syz.columns() for e in col if e]
        if not entries:
            continue
        I = Ideal(entries, R).minimalized()
        if I.is_unit():
            continue
        d, e = dim_degree(I)
        if (R.nvars - d, e) != (2, 5):
            continue
        if not smoothness_check(I, 2, seed=attempt):
            continue
        return CurveModel(R, I, genus=2, degree=5, seed=seed)
    raise RetryBudgetExceeded(f"no smooth genus-2 quintic in {retries} attempts")


def is_smooth_plane_curve(f: Polynomial) -> bool:
    R = f.ring
    sing = Ideal([f] + [f.derivative(i) for i in range(R.nvars)], R)
    return sing.is_unit() or dim_degree(sing)[0] <= 0


def plane_cubic(f: Polynomial | str, ring: PolyRing | None = None, check: bool = True) -> CurveModel:
    R = ring or coordinate_ring(3)
    f = R(f) if isinstance(f, str) else f
    if f.degree() != 3 or not f.is_homogeneous():
        raise ValueError("expected a homogeneous cubic")
    if check and not is_smooth_plane_curve(f):
        raise ValueError("the cubic is singular")
    return CurveModel(R, Ideal([f], R), genus=1, degree=3)


def random_plane_cubic(seed: int = 0, p: int = DEFAULT_PRIME, retries: int = 20,
                       ring: PolyRing | None = None) -> CurveModel:
    R = ring or coordinate_ring(3, p)
    stream = SeedStream(seed).child("cubic")
    monos = R.monomials_of_degree(3)
    for attempt in range(retries):
        cs = stream.child(f"try{attempt}").field_elements(len(monos), p)
        f = R.zero()
        for c, m in zip(cs, monos):
            f = f + m.scale(c)
        if f and is_smooth_plane_curve(f):
            return CurveModel(R, Ideal([f], R), genus=1, degree=3, seed=seed)
    raise RetryBudgetExceeded(f"no smooth cubic in {retries} attempts")


# -- points ---------------------------------------------------------------------------------
def point_ideal(ring: PolyRing, pt: Sequence[int]) -> Ideal:
    p = ring.p
    pt = [c % p for c in pt]
    i0 = next(i for i, c in enumerate(pt) if c)
    gens = []
    for j in range(ring.nvars):
        if j != i0:
            gens.append(ring.var(j).scale(pt[i0]) - ring.var(i0).scale(pt[j]))
    return Ideal(gens, ring)


def normalize_point(pt: Sequence[int], p: int) -> tuple[int, ...]:
    pt = [c % p for c in pt]
    i0 = next(i for i, c in enumerate(pt) if c)
    inv = pow(pt[i0], -1, p)
    return tuple(c * inv % p for c in pt)


def _binary_roots(g: Polynomial) -> list[tuple[int, int]]:
    """Points (a:b) of P^1 where the binary form g(v0, v1) vanishes."""
    p = g.ring.p
    d = g.degree()
    coeffs = [0] * (d + 1)
    for e, c in g.exponent_items():
        coeffs[e[1]] = c
    out = [(1, r) for r in univariate_roots(coeffs, p)] if any(coeffs[1:]) else []
    if not any(coeffs[1:]) and coeffs[0]:
        out = []
    if coeffs[d] == 0:
        out.append((0, 1))
    return out


def rational_points(I: Ideal) -> list[tuple[int, ...]]:
    """All K-rational points of a zero-dimensional projective scheme."""
    ring = I.ring
    n = ring.nvars
    p = ring.p
    gens = [g.lift() for g in I.gens] + list(ring.relations)
    gens = [g for g in gens if g]
    if n == 1:
        return [(1,)] if not gens else []
    if not gens:
        raise ValueError("scheme is not zero-dimensional")
    if n == 2:
        g = gens[0]
        for h in gens[1:]:
            g = poly_gcd(g, h)
        if g.is_constant():
            return []
        return sorted({normalize_point(r, p) for r in _binary_roots(g)})
    amb = ring.ambient
    J = Ideal(gens, amb)
    E = eliminate(J, range(2, n))
    pts: set = set()
    if E.gens:
        g = E.gens[0]
        for h in E.gens[1:]:
            g = poly_gcd(g, h)
        roots = _binary_roots(g) if not g.is_constant() else []
    else:
        raise ValueError("scheme is not zero-dimensional")
    for a, b in roots:
        # restrict to the line through the root: substitute and recurse
        if a:
            sub_vars = [0] + list(range(2, n))
            images_for = lambda R2: [R2.var(0), R2.var(0).scale(b)] + [R2.var(k) for k in range(1, n - 1)]
        else:
            sub_vars = list(range(1, n))
            images_for = lambda R2: [R2.zero(), R2.var(0)] + [R2.var(k) for k in range(1, n - 1)]
        R2 = PolyRing([amb.names[i] for i in sub_vars], p=p)
        imgs = images_for(R2)
        sub = Ideal([g.substitute(imgs, R2) for g in gens], R2)
        for q in rational_points(sub):
            if a:
                full = [q[0], q[0] * b % p] + list(q[1:])
            else:
                full = [0] + list(q)
            pts.add(normalize_point(full, p))
    # points on v0 = v1 = 0 are invisible to the projection
    R3 = PolyRing([amb.names[i] for i in range(2, n)], p=p)
    imgs = [R3.zero(), R3.zero()] + R3.gens()
    sub = Ideal([g.substitute(imgs, R3) for g in gens], R3)
    for q in rational_points(sub):
        pts.add(normalize_point([0, 0] + list(q), p))
    return sorted(pts)


def random_point(C: CurveModel, stream: SeedStream, retries: int = 50,
                 avoid: Sequence[tuple] = ()) -> tuple[int, ...]:
    R = C.ring
    p = R.p
    n = R.nvars
    avoid = set(avoid)
    for attempt in range(retries):
        cs = stream.child(f"hyp{attempt}").field_elements(n, p)
        if cs[-1] == 0:
            continue
        # hyperplane x_last = -(c_0 x_0 + ...)/c_last; substitute it away
        inv = pow(cs[-1], -1, p)
        R2 = PolyRing(list(R.names[:-1]), p=p)
        last = R2.zero()
        for i in range(n - 1):
            last = last - R2.var(i).scale(cs[i] * inv)
        imgs = R2.gens() + [last]
        sec = Ideal([g.substitute(imgs, R2) for g in C.ideal.gens], R2)
        if dim_degree(sec)[0] != 1:
            continue
        pts = rational_points(sec)
        cands = []
        for q in pts:
            full = list(q) + [last.evaluate(q)]
            fp = normalize_point(full, p)
            if fp not in avoid:
                cands.append(fp)
        if cands:
            return cands[stream.child(f"pick{attempt}").integer(0, len(cands))]
    raise RetryBudgetExceeded(f"no rational point found in {retries} hyperplane sections")


def random_points(C: CurveModel, t: int, seed: int | SeedStream = 0, retries: int = 50,
                  avoid: Sequence[tuple] = ()) -> DivisorRep:
    """Saturated ideal of t distinct rational points of C."""
    if t < 1:
        raise ValueError("need at least one point")
    stream = seed if isinstance(seed, SeedStream) else SeedStream(seed).child("points")
    pts: list[tuple] = []
    for k in range(t):
        pts.append(random_point(C, stream.child(f"pt{k}"), retries, list(avoid) + pts))
    return divisor_from_points(C.ring, pts)


def divisor_from_points(R: PolyRing, pts: Sequence[Sequence[int]]) -> DivisorRep:
    pts = [normalize_point(q, R.p) for q in pts]
    I = intersect_all([point_ideal(R, q) for q in pts])
    return DivisorRep(I, len(pts), tuple(pts))
