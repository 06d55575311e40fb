"""Homogeneous ideals and the standard operations on them."""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from ..core.ring import Polynomial, PolyRing, RingMismatchError
from . import hilbert as hb
from .engine import InhomogeneousError, ModuleLayout, Reducer, buchberger, reduced_from_gb
from .modgb import SubmoduleGB


class GroebnerBasis:
    """Reduced Gröbner basis of ``I + relations`` in the ambient ring."""

    def __init__(self, ring: PolyRing, gens: Sequence[Polynomial], max_degree: int | None = None):
        self.ring = ring
        amb = ring.ambient
        layout = ModuleLayout(amb.mono)
        rels = [dict(r.terms) for r in ring.relations]
        self.result = buchberger(layout, ring.p, [dict(g.terms) for g in gens], rels, max_degree)
        self.elements = [Polynomial(amb, e.as_dict()) for e in self.result.elems]
        self.reducer = Reducer(layout, self.result.elems, ring.p)
        self._numerator = None

    @property
    def complete(self) -> bool:
        return self.result.complete

    def normal_form(self, f: Polynomial) -> Polynomial:
        return Polynomial(self.ring, self.reducer.reduce(f.terms))

    def contains(self, f: Polynomial) -> bool:
        return not self.reducer.reduce(f.terms)

    def leading_exponents(self) -> list[tuple[int, ...]]:
        return [e.lexps for e in self.result.elems]

    def is_unit(self) -> bool:
        one = self.ring.ambient.mono.one
        return any(e.lead == one for e in self.result.elems)

    def numerator(self) -> dict:
        if self._numerator is None:
            if not self.complete:
                raise ValueError("Hilbert data needs a complete Gröbner basis")
            n = hb.numerator(self.leading_exponents(), [(w,) for w in self.ring.weights])
            self._numerator = {k[0]: c for k, c in n.items()}
        return self._numerator


class Ideal:
    """A homogeneous ideal given by generators in a (quotient) ring."""

    def __init__(self, gens: Iterable[Polynomial | str], ring: PolyRing | None = None):
        gens = list(gens)
        if ring is None:
            if not gens or isinstance(gens[0], str):
                raise ValueError("ring required for an empty or textual generator list")
            ring = gens[0].ring
        parsed = []
        for g in gens:
            g = ring(g) if isinstance(g, str) else g
            if g.ring != ring:
                if g.ring.ambient == ring.ambient:
                    g = ring.from_terms(g.terms)
                else:
                    raise RingMismatchError("generator from another ring")
            if g:
                if not g.is_homogeneous():
                    raise InhomogeneousError(f"inhomogeneous generator {g}")
                parsed.append(g)
        self.ring = ring
        self.gens = tuple(parsed)
        self._gb: GroebnerBasis | None = None
        self._mingens: tuple | None = None

    # -- Gröbner data ----------------------------------------------------
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            self._gb = GroebnerBasis(self.ring, [g.lift() for g in self.gens])
        return self._gb

    def normal_form(self, f: Polynomial) -> Polynomial:
        return self.gb().normal_form(f)

    def contains(self, f: Polynomial) -> bool:
        return self.gb().contains(f)

    def __contains__(self, f):
        return self.contains(f)

    def is_subset(self, other: "Ideal") -> bool:
        return all(other.contains(g) for g in self.gens)

    __le__ = is_subset

    def __eq__(self, other):
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring == other.ring and self.is_subset(other) and other.is_subset(self)

    __hash__ = None

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gb().is_unit()

    def mingens(self) -> tuple[Polynomial, ...]:
        if self._mingens is None:
            if not self.gens:
                self._mingens = ()
            else:
                top = max(g.degree() for g in self.gens)
                res = GroebnerBasis(self.ring, [g.lift() for g in self.gens], top).result
                out = []
                p = self.ring.p
                for _, rem in res.minimal:
                    inv = pow(rem[max(rem)], -1, p)
                    out.append(Polynomial(self.ring, {k: c * inv % p for k, c in rem.items()}))
                self._mingens = tuple(out)
        return self._mingens

    def minimalized(self) -> "Ideal":
        J = Ideal(self.mingens(), self.ring)
        J._gb = self._gb
        J._mingens = J.gens
        return J

    def generator_degrees(self) -> list[int]:
        return [g.degree() for g in self.gens]

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal(self.gens + other.gens, self.ring)

    def __mul__(self, other: "Ideal") -> "Ideal":
        self._check(other)
        return Ideal([f * g for f in self.gens for g in other.gens], self.ring).minimalized()

    def __pow__(self, k: int) -> "Ideal":
        if k < 1:
            return Ideal([self.ring.one()], self.ring)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError("ideals in different rings")

    def map_to(self, ring: PolyRing, mapping: Sequence[int] | None = None) -> "Ideal":
        return Ideal([ring.convert(g.lift(), mapping) for g in self.gens], ring)

    # -- invariants --------------------------------------------------------
    def hilbert_numerator(self) -> dict:
        return self.gb().numerator()

    def hilbert_function(self, t: int) -> int:
        return hilbert_function(self, t)

    def dim_degree(self) -> tuple[int, int]:
        return dim_degree(self)

    def codim(self) -> int:
        d, _ = dim_degree(self)
        return self.ring.nvars - d

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"


def as_ideal(x, ring: PolyRing | None = None) -> Ideal:
    if isinstance(x, Ideal):
        return x
    return Ideal(list(x), ring)


# -- Gröbner front ends ------------------------------------------------------
def groebner_basis(I: Ideal | Sequence[Polynomial]) -> list[Polynomial]:
    I = as_ideal(I)
    return [I.ring.from_terms(g.terms, reduce=False) for g in I.gb().elements
            if not _is_relation(I.ring, g)]


def _is_relation(ring: PolyRing, g: Polynomial) -> bool:
    return any(g.terms == r.terms for r in ring.relations)


def normal_form(f: Polynomial, G: Ideal | GroebnerBasis) -> Polynomial:
    gb = G.gb() if isinstance(G, Ideal) else G
    return gb.normal_form(f)


# -- Hilbert data -------------------------------------------------------------
def hilbert_function(X, t: int) -> int:
    from ..modules import GradedModule
    if isinstance(X, GradedModule):
        return X.hilbert_function(t)
    n = X.gb().numerator()
    return hb.series({(k,): c for k, c in n.items()}, X.ring.weights, t, t)[t]


def hilbert_values(I: Ideal, tmax: int = 10) -> list[int]:
    n = I.gb().numerator()
    s = hb.series({(k,): c for k, c in n.items()}, I.ring.weights, tmax, 0)
    return [s[t] for t in range(tmax + 1)]


def dim_degree(I: Ideal) -> tuple[int, int]:
    if any(w != 1 for w in I.ring.weights):
        raise ValueError("dimension/degree implemented for standard gradings")
    return hb.dim_degree_from_numerator(I.gb().numerator(), I.ring.nvars)


def hilbert_data(I: Ideal, tmax: int = 10) -> hb.HilbertData:
    n = I.gb().numerator()
    d, e = dim_degree(I)
    return hb.HilbertData(n, I.ring.nvars, dict(enumerate(hilbert_values(I, tmax))), d, e)


# -- colon, intersection, saturation ------------------------------------------
def _second_component_ideal(ring: PolyRing, vectors: list[list[Polynomial]], twists: Sequence[int]) -> Ideal:
    """Elements x with (0, .., 0, x) in the module generated by ``vectors``
    (last position), modulo the ring relations."""
    sub = SubmoduleGB(ring, twists, vectors)
    last = len(twists) - 1
    out = []
    for e in sub.result.elems:
        if e.pos == last and not e.rel:
            terms = {k & sub.layout.monomask: c for k, c in e.as_dict().items()}
            out.append(Polynomial(ring, terms))
    return Ideal(out, ring).minimalized()


def ideal_quotient(I: Ideal, J: Ideal | Polynomial) -> Ideal:
    """I : J (for an element or an ideal J)."""
    ring = I.ring
    if isinstance(J, Polynomial):
        J = Ideal([J], ring)
    I._check(J)
    if not J.gens:
        return Ideal([ring.one()], ring)
    if not I.gens:
        # annihilator of J in a domain-like setting; computed the same way
        pass
    t = len(J.gens)
    zero, one = ring.zero(), ring.one()
    twists = [-g.degree() for g in J.gens] + [0]
    vecs = [list(J.gens) + [one]]
    for j in range(t):
        for f in I.gens:
            v = [zero] * (t + 1)
            v[j] = f
            vecs.append(v)
    return _second_component_ideal(ring, vecs, twists)


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    ring = I.ring
    I._check(J)
    if not I.gens or not J.gens:
        return Ideal([], ring)
    zero = ring.zero()
    vecs = [[f, zero] for f in I.gens] + [[g, g] for g in J.gens]
    return _second_component_ideal(ring, vecs, [0, 0])


def intersect_all(ideals: Sequence[Ideal]) -> Ideal:
    out = ideals[0]
    for J in ideals[1:]:
        out = ideal_intersection(out, J)
    return out


def _variable_index(g: Polynomial) -> int | None:
    if len(g.terms) != 1:
        return None
    exps = g.lead_exponents()
    if sum(exps) == 1:
        return exps.index(1)
    return None


def _var_ring(ring: PolyRing, last: int) -> tuple[PolyRing, list[int]]:
    """Relation-free degrevlex copy of ``ring`` with variable ``last`` moved last."""
    n = ring.nvars
    perm = [i for i in range(n) if i != last] + [last]
    new = PolyRing([ring.names[i] for i in perm], [ring.weights[i] for i in perm], p=ring.p)
    mapping = [0] * n
    for new_i, old_i in enumerate(perm):
        mapping[old_i] = new_i
    return new, mapping


def _all_gens(I: Ideal) -> list[Polynomial]:
    return [g.lift() for g in I.gens] + list(I.ring.relations)


def _bayer(gens: Sequence[Polynomial], var: int):
    """GB of ``gens`` in degrevlex with ``var`` last, and the GB of the
    saturation by ``var`` obtained by dividing out powers of it."""
    ring = gens[0].ring
    new, mapping = _var_ring(ring, var)
    conv = [new.convert(g, mapping) for g in gens]
    res = buchberger(ModuleLayout(new.mono), new.p, [dict(g.terms) for g in conv if g])
    mono = new.mono
    last = new.nvars - 1
    unit = mono.var(last) - mono.one
    divided = []
    for e in res.elems:
        k = mono.exponent(e.lead, last)
        d = e.as_dict()
        if k:
            d = {key - k * unit: c for key, c in d.items()}
        divided.append(d)
    sat = reduced_from_gb(ModuleLayout(new.mono), new.p, divided)
    back = [0] * new.nvars
    for old_i, new_i in enumerate(mapping):
        back[new_i] = old_i
    return new, back, res, sat


def saturate_by_variable(I: Ideal, var: int) -> Ideal:
    """I : x_var^infinity, exactly, via the reverse-lex division trick."""
    ring = I.ring
    gens = _all_gens(I)
    if not gens:
        return I
    new, back, _, sat = _bayer(gens, var)
    out = [ring.convert(Polynomial(new, e.as_dict()), back) for e in sat.elems]
    return Ideal(out, ring).minimalized()


def _substitute_linear(g: Polynomial, var: int, images: Polynomial) -> Polynomial:
    imgs = [g.ring.var(i) for i in range(g.ring.nvars)]
    imgs[var] = images
    return g.substitute(imgs, g.ring)


def _change_for_form(ring: PolyRing, coeffs: dict[int, int]) -> tuple[int, Polynomial, Polynomial]:
    """Pick the pivot variable v of the linear form sum coeffs[i] x_i and return
    (v, image of x_v under the forward change, image under the inverse).
    After the forward change the variable x_v stands for the linear form."""
    p = ring.p
    v = max(i for i, c in coeffs.items() if c % p)
    inv = pow(coeffs[v], -1, p)
    fwd = ring.var(v).scale(inv)
    for i, c in coeffs.items():
        if i != v and c % p:
            fwd = fwd - ring.var(i).scale(c * inv)
    bwd = ring.zero()
    for i, c in coeffs.items():
        bwd = bwd + ring.var(i).scale(c)
    return v, fwd, bwd


def saturate_by_linear_form(I: Ideal, coeffs: dict[int, int]) -> tuple[Ideal, tuple]:
    """I : l^infinity for the linear form l = sum coeffs[i] x_i.

    Returns the saturation and the Gröbner bases (before, after) in the
    changed coordinates for certification."""
    ring = I.ring
    amb = ring.ambient
    v, fwd, bwd = _change_for_form(amb, coeffs)
    gens = [_substitute_linear(g, v, fwd) for g in _all_gens(I)]
    new, back, res, sat = _bayer(gens, v)
    out = []
    for e in sat.elems:
        g = amb.convert(Polynomial(new, e.as_dict()), back)
        out.append(ring.from_terms(_substitute_linear(g, v, bwd).terms))
    return Ideal(out, ring).minimalized(), (new, res, sat)


def _torsion_certified(new_ring: PolyRing, res, sat, varset_new: Sequence[int]) -> bool:
    """True if sat/I is annihilated by a power of the ideal of ``varset_new``,
    decided from Hilbert series numerators of leading-term ideals."""
    n = new_ring.nvars
    vs = set(varset_new)
    lead_i = [e.lexps for e in res.elems]
    lead_t = [e.lexps for e in sat.elems]
    if len(vs) == n:
        grading = [(w,) for w in new_ring.weights]
        diff = hb.sub(hb.numerator(lead_i, grading), hb.numerator(lead_t, grading))
        return _divisible_by_one_minus(diff, 0, n)
    grading = [(1, 0) if i in vs else (0, 1) for i in range(n)]
    # the certificate needs every element to be bihomogeneous
    def bihomog(e):
        degs = {tuple(sum(ex[i] for i in range(n) if (i in vs) == flag) for flag in (True, False))
                for ex in (new_ring.mono.decode(k) for k in e.as_dict())}
        return len(degs) == 1
    if not all(bihomog(e) for e in res.elems):
        return False
    diff = hb.sub(hb.numerator(lead_i, grading), hb.numerator(lead_t, grading))
    return _divisible_by_one_minus(diff, 0, len(vs))


def _divisible_by_one_minus(num: dict, axis: int, times: int) -> bool:
    """Is the multigraded polynomial ``num`` divisible by (1 - s_axis)^times?"""
    cur = dict(num)
    for _ in range(times):
        if not cur:
            return True
        groups: dict = {}
        for k, c in cur.items():
            rest = k[:axis] + k[axis + 1:]
            groups.setdefault(rest, {})[k[axis]] = c
        nxt = {}
        for rest, poly in groups.items():
            if sum(poly.values()) != 0:
                return False
            acc = 0
            for d in range(min(poly), max(poly)):
                acc += poly.get(d, 0)
                if acc:
                    nxt[rest[:axis] + (d,) + rest[axis:]] = acc
        cur = nxt
    return True


def saturate_by_variables(I: Ideal, varset: Sequence[int], seed: int = 0, tries: int = 3) -> Ideal:
    """I : (x_i : i in varset)^infinity.

    A generic linear form in the variables is tried first (one Gröbner basis),
    accepted only when a Hilbert series certificate shows the difference is
    torsion; otherwise the exact intersection of single-variable saturations
    is returned."""
    varset = sorted(set(varset))
    if len(varset) == 1:
        return saturate_by_variable(I, varset[0])
    if not I.gens:
        return I
    rng = random.Random(seed)
    p = I.ring.p
    for _ in range(tries):
        coeffs = {i: rng.randrange(1, p) for i in varset}
        T, (new, res, sat) = saturate_by_linear_form(I, coeffs)
        # variables of the changed ring corresponding to varset
        names = [I.ring.names[i] for i in varset]
        vnew = [new.index[nm] for nm in names]
        if _torsion_certified(new, res, sat, vnew):
            return T
    return intersect_all([saturate_by_variable(I, i) for i in varset])


def saturation(I: Ideal, J: Ideal | None = None, max_steps: int = 50) -> Ideal:
    """I : J^infinity; J defaults to the ideal of all variables."""
    ring = I.ring
    if J is None:
        return saturate_by_variables(I, range(ring.nvars))
    I._check(J)
    idx = [_variable_index(g) for g in J.gens]
    if J.gens and all(i is not None for i in idx):
        return saturate_by_variables(I, idx)
    cur = I
    for _ in range(max_steps):
        nxt = ideal_quotient(cur, J)
        if nxt.is_subset(cur):
            return cur
        cur = nxt
    raise RuntimeError("saturation did not stabilise")


# -- elimination ---------------------------------------------------------------
def subring(ring: PolyRing, keep: Sequence[int]) -> PolyRing:
    return PolyRing([ring.names[i] for i in keep], [ring.weights[i] for i in keep], p=ring.p)


def eliminate(I: Ideal, variables: Sequence[int], target: PolyRing | None = None,
              max_degree: int | None = None) -> Ideal:
    """I intersected with the subring of the variables not in ``variables``.

    Computed with a block order whose first block holds the eliminated
    variables.  The result lives in ``target`` (default: a fresh ring on the
    remaining variables)."""
    ring = I.ring
    elim = sorted(set(variables))
    keep = [i for i in range(ring.nvars) if i not in set(elim)]
    if target is None:
        target = subring(ring, keep)
    perm = elim + keep
    block = PolyRing([ring.names[i] for i in perm], [ring.weights[i] for i in perm],
                     order="block", blocks=(len(elim), len(keep)), p=ring.p)
    mapping = [0] * ring.nvars
    for new_i, old_i in enumerate(perm):
        mapping[old_i] = new_i
    gens = [block.convert(g, mapping) for g in _all_gens(I)]
    res = buchberger(ModuleLayout(block.mono), ring.p, [dict(g.terms) for g in gens if g],
                     max_degree=max_degree)
    out = []
    mono = block.mono
    nel = len(elim)
    tmap = [target.index[ring.names[i]] for i in keep]
    for e in res.elems:
        if mono.block_degree(e.lead, 0) == 0 and nel:
            poly = Polynomial(block, e.as_dict())
            items = [(tuple(ex[nel:]), c) for ex, c in poly.exponent_items()]
            out.append(target.from_exponents([(_place(ex, tmap, target.nvars), c) for ex, c in items]))
        elif not nel:
            out.append(target.convert(Polynomial(block, e.as_dict())))
    return Ideal(out, target).minimalized()


def _place(ex, tmap, n):
    e = [0] * n
    for i, a in zip(tmap, ex):
        e[i] += a
    return e


def saturate_eliminate(I: Ideal, varset: Sequence[int], target: PolyRing | None = None,
                       form: dict[int, int] | None = None, certify: bool = False,
                       seed: int = 0) -> Ideal:
    """(I : (varset)^infinity) intersected with the subring of the other
    variables, for I bihomogeneous w.r.t. (varset, rest).

    The saturation is replaced by saturation with respect to one linear form
    ``form`` in the varset (default: the last variable of varset).  This is
    exact when the true saturation is prime and the form is not in it, or when
    the form is a nonzerodivisor modulo the saturation in the sense that no
    associated prime of I containing it avoids the whole varset.  With
    ``certify`` a Hilbert series check is run and the exact fallback used on
    failure."""
    ring = I.ring
    vs = sorted(set(varset))
    keep = [i for i in range(ring.nvars) if i not in set(vs)]
    if target is None:
        target = subring(ring, keep)
    amb = ring.ambient
    if form is None:
        form = {vs[-1]: 1}
    v, fwd, _ = _change_for_form(amb, form)
    gens = [_substitute_linear(g, v, fwd) for g in _all_gens(I)]
    new, back, res, sat = _bayer(gens, v)
    if certify:
        names = [ring.names[i] for i in vs]
        if not _torsion_certified(new, res, sat, [new.index[nm] for nm in names]):
            parts = [saturate_eliminate(I, vs, target, {i: 1}) for i in vs]
            return intersect_all(parts).minimalized()
    vnew = {new.index[ring.names[i]] for i in vs}
    tmap = {new.index[ring.names[i]]: target.index[ring.names[i]] for i in keep}
    out = []
    for e in sat.elems:
        poly = Polynomial(new, e.as_dict())
        items = list(poly.exponent_items())
        if any(ex[i] for ex, _ in items for i in vnew):
            continue
        conv = []
        for ex, c in items:
            t = [0] * target.nvars
            for i, a in enumerate(ex):
                if a:
                    t[tmap[i]] += a
            conv.append((t, c))
        out.append(target.from_exponents(conv))
    return Ideal(out, target).minimalized()


# -- ring maps -------------------------------------------------------------------
def ring_map_kernel(J: Ideal, forms: Sequence[Polynomial], k: int | None = None,
                    target: PolyRing | None = None, names: Sequence[str] | None = None,
                    max_degree: int | None = None) -> Ideal:
    """Kernel of K[z_0..z_n] -> T/J, z_i -> forms[i] (forms of one degree k)."""
    T = J.ring.ambient
    forms = [f.lift() if f.ring != T else f for f in forms]
    degs = {f.degree() for f in forms if f}
    if len(degs) > 1 or any(not f.is_homogeneous() for f in forms):
        raise ValueError("forms must be homogeneous of one degree")
    if k is None:
        k = degs.pop() if degs else 1
    elif degs and degs != {k}:
        raise ValueError(f"forms have degree {degs}, expected {k}")
    nz = len(forms)
    if names is None:
        names = [f"z_{i}" for i in range(nz)]
    if target is None:
        target = PolyRing(names, p=T.p)
    ny = T.nvars
    big = PolyRing(list(T.names) + list(names), list(T.weights) + [k] * nz, order="block",
                   blocks=(ny, nz), p=T.p)
    gens = [big.convert(g.lift(), list(range(ny))) for g in J.gens]
    gens += [big.convert(r, list(range(ny))) for r in J.ring.relations]
    for i, f in enumerate(forms):
        gens.append(big.var(ny + i) - big.convert(f, list(range(ny))))
    I = Ideal(gens, big)
    zdeg = None if max_degree is None else max_degree * k
    E = eliminate(I, range(ny), max_degree=zdeg)
    # E lives in a ring with z-variables weighted k; move to the standard target
    out = [target.from_exponents(list(g.exponent_items())) for g in E.gens]
    return Ideal(out, target).minimalized()


# -- principal-ideal helpers --------------------------------------------------------
def exact_division(f: Polynomial, g: Polynomial) -> Polynomial:
    """f / g when g divides f exactly (multivariate division)."""
    ring = f.ring
    lead = max(g.terms)
    inv = pow(g.terms[lead], -1, ring.p)
    mono = ring.mono
    rem = dict(f.terms)
    q: dict = {}
    p = ring.p
    gm = {k: c * inv % p for k, c in g.terms.items()}
    while rem:
        k = max(rem)
        if not mono.divides(lead, k):
            raise ArithmeticError("division is not exact")
        c = rem[k]
        m = mono.div(k, lead)
        q[m] = (q.get(m, 0) + c * inv) % p
        for gk, gc in gm.items():
            nk = mono.mul(gk, m)
            v = (rem.get(nk, 0) - c * gc) % p
            if v:
                rem[nk] = v
            else:
                rem.pop(nk, None)
    return ring.from_terms(q, reduce=False)


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    I = ideal_intersection(Ideal([f], f.ring), Ideal([g], f.ring))
    if len(I.gens) != 1:
        raise ArithmeticError("intersection of principal ideals is not principal")
    return I.gens[0]


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    if not f:
        return g.monic()
    if not g:
        return f.monic()
    if f.is_constant() or g.is_constant():
        return f.ring.one()
    return exact_division(f * g, poly_lcm(f, g)).monic()


def squarefree_part(f: Polynomial) -> Polynomial:
    """Product of the distinct irreducible factors of f (up to a scalar)."""
    if not f:
        raise ValueError("squarefree part of zero")
    if f.ring.relations:
        raise ValueError("squarefree part needs a polynomial ring")
    if f.degree() >= f.ring.p:
        raise ValueError("characteristic must exceed the degree")
    g = f
    for i in range(f.ring.nvars):
        d = f.derivative(i)
        if d:
            g = poly_gcd(g, d)
        if g.is_constant():
            break
    return exact_division(f, g).monic()


def is_unit_ideal(I: Ideal) -> bool:
    return I.is_unit()
