"""Polynomial rings over Z/p and their elements."""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping, Sequence

from .field import DEFAULT_PRIME, FieldElement, is_prime
from .orders import MonomialOrder

Terms = dict  # packed monomial key -> coefficient in [1, p)


class RingMismatchError(ValueError):
    pass


class PolyRing:
    """K[x_0..x_n] with a graded term order, optionally modulo relations.

    ``order`` is one of ``"degrevlex"``, ``"weighted-degrevlex"`` or
    ``"block"``; for block orders ``blocks`` lists the block sizes (a single
    integer is read as the size of the first block).
    """

    def __init__(self, names: Sequence[str], weights: Sequence[int] | None = None,
                 order: str = "degrevlex", blocks: Sequence[int] | int | None = None,
                 p: int = DEFAULT_PRIME, relations: Iterable | None = None):
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        if not is_prime(p) or p == 2:
            raise ValueError(f"modulus {p} is not an odd prime")
        n = len(names)
        if isinstance(blocks, int):
            blocks = (blocks, n - blocks) if blocks < n else (n,)
        if order == "block" and blocks is None:
            raise ValueError("block order needs block sizes")
        if order != "block":
            blocks = None
        if order == "degrevlex" and weights is not None and any(w != 1 for w in weights):
            order = "weighted-degrevlex"
        if order not in ("degrevlex", "weighted-degrevlex", "block"):
            raise ValueError(f"unknown term order {order!r}")
        self.names = names
        self.nvars = n
        self.p = p
        self.order_name = order
        self.mono = MonomialOrder(n, weights, blocks)
        self.weights = self.mono.weights
        self.index = {v: i for i, v in enumerate(names)}
        self.ambient = self
        self.relations = ()  # Gröbner basis of the defining ideal (ambient polys)
        self._reducer = None
        if relations is not None:
            self._init_quotient(relations)

    # -- quotient support --------------------------------------------
    def _init_quotient(self, relations):
        from ..groebner.engine import Reducer, groebner_basis_raw
        amb = PolyRing(self.names, self.weights, self.order_name,
                       None if self.order_name != "block" else self.mono.blocks, self.p)
        self.ambient = amb
        gens = []
        for r in relations:
            if isinstance(r, str):
                from .parse import parse_polynomial
                r = parse_polynomial(r, amb)
            if r.ring.ambient != amb:
                raise RingMismatchError("relation from a different ring")
            if r:
                gens.append(dict(r.terms))
        basis = groebner_basis_raw(amb, gens)
        self.relations = tuple(Polynomial(amb, dict(b)) for b in basis)
        self._reducer = Reducer(amb, basis) if basis else None

    def quotient(self, relations: Iterable) -> "PolyRing":
        rels = list(self.relations) + [r if isinstance(r, str) else r.lift() for r in relations]
        return PolyRing(self.names, self.weights, self.order_name,
                        None if self.order_name != "block" else self.mono.blocks,
                        self.p, rels)

    @property
    def is_quotient(self) -> bool:
        return bool(self.relations)

    def reduce_terms(self, terms: Terms) -> Terms:
        if self._reducer is None:
            return terms
        return self._reducer.reduce(terms)

    # -- identity -----------------------------------------------------
    def signature(self):
        return (self.names, self.weights, self.mono.blocks, self.p,
                tuple(tuple(sorted(r.terms.items())) for r in self.relations))

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, PolyRing) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature()[:4])

    def __repr__(self):
        base = f"Z/{self.p}[{', '.join(self.names)}]"
        if self.order_name != "degrevlex":
            base += f" ({self.mono.kind}, blocks={self.mono.blocks}, weights={self.weights})"
        if self.relations:
            base += f" / ({len(self.relations)} relations)"
        return base

    # -- element construction ------------------------------------------
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c) -> "Polynomial":
        c = int(c) % self.p
        return Polynomial(self, {self.mono.one: c} if c else {})

    def var(self, v: int | str) -> "Polynomial":
        i = self.index[v] if isinstance(v, str) else v
        return self.from_terms({self.mono.var(i): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.var(i) for i in range(self.nvars)]

    def from_terms(self, terms: Mapping[int, int], reduce: bool = True) -> "Polynomial":
        p = self.p
        t = {k: c % p for k, c in terms.items() if c % p}
        if reduce and self._reducer is not None:
            t = self._reducer.reduce(t)
        return Polynomial(self, t)

    def from_exponents(self, items: Iterable[tuple[Sequence[int], int]]) -> "Polynomial":
        enc = self.mono.encode
        p = self.p
        acc: dict[int, int] = {}
        for exps, c in items:
            k = enc(exps)
            acc[k] = (acc.get(k, 0) + int(c)) % p
        return self.from_terms(acc)

    def monomial(self, exps: Sequence[int], c: int = 1) -> "Polynomial":
        return self.from_exponents([(exps, c)])

    def convert(self, f: "Polynomial", mapping: Sequence[int] | None = None) -> "Polynomial":
        """Re-encode ``f`` into this ring.  ``mapping[i]`` is the index in this
        ring of variable ``i`` of ``f``'s ring; by default variables are matched
        by name."""
        src = f.ring
        if mapping is None:
            mapping = [self.index[v] for v in src.names]
        n = self.nvars
        items = []
        for exps, c in f.exponent_items():
            e = [0] * n
            for i, a in enumerate(exps):
                if a:
                    e[mapping[i]] += a
            items.append((e, c))
        return self.from_exponents(items)

    def __call__(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            if x.ring == self:
                return x
            return self.convert(x)
        if isinstance(x, str):
            from .parse import parse_polynomial
            return parse_polynomial(x, self)
        if isinstance(x, FieldElement):
            return self.constant(x.value)
        return self.constant(x)

    def monomials_of_degree(self, d: int) -> list["Polynomial"]:
        from .orders import monomials_of_degree
        keys = sorted((self.mono.encode(e) for e in monomials_of_degree(self.nvars, d, self.weights)),
                      reverse=True)
        return [Polynomial(self, {k: 1}) for k in keys]


class Polynomial:
    """An element of a :class:`PolyRing`; immutable by convention."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, terms: Terms):
        self.ring = ring
        self.terms = terms
        self._hash = None

    # -- basic protocol ----------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, FieldElement)):
            return self == self.ring.constant(int(other))
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring is not self.ring and other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, (int, FieldElement)):
            return self.ring.constant(int(other))
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        p = self.ring.p
        t = dict(self.terms)
        for k, c in other.terms.items():
            v = (t.get(k, 0) + c) % p
            if v:
                t[k] = v
            else:
                t.pop(k, None)
        return Polynomial(self.ring, t)

    __radd__ = __add__

    def __neg__(self):
        p = self.ring.p
        return Polynomial(self.ring, {k: p - c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, c) -> "Polynomial":
        p = self.ring.p
        c = int(c) % p
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {k: v * c % p for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(int(other))
        other = self._coerce(other)
        return Polynomial(self.ring, self.ring.reduce_terms(mul_terms(self.ring, self.terms, other.terms)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(pow(self.lc(), -1, self.ring.p))

    # -- leading data -----------------------------------------------------
    def lead_key(self) -> int:
        return max(self.terms)

    def lc(self) -> int:
        return self.terms[max(self.terms)]

    def lead_exponents(self) -> tuple[int, ...]:
        return self.ring.mono.decode(max(self.terms))

    def sorted_keys(self) -> list[int]:
        return sorted(self.terms, reverse=True)

    def exponent_items(self) -> Iterator[tuple[tuple[int, ...], int]]:
        """(exponents, coefficient) pairs in descending term order."""
        dec = self.ring.mono.decode
        for k in self.sorted_keys():
            yield dec(k), self.terms[k]

    # -- grading --------------------------------------------------------
    def degree(self) -> int:
        if not self.terms:
            return -1
        deg = self.ring.mono.degree
        return max(deg(k) for k in self.terms)

    def degrees(self) -> set[int]:
        deg = self.ring.mono.degree
        return {deg(k) for k in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def multidegree(self, groups: Sequence[Sequence[int]]) -> tuple[int, ...] | None:
        """Degree vector w.r.t. variable groups, or None if not multihomogeneous."""
        seen = None
        for exps, _ in self.exponent_items():
            d = tuple(sum(exps[i] for i in g) for g in groups)
            if seen is None:
                seen = d
            elif d != seen:
                return None
        return seen

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and self.ring.mono.one in self.terms)

    def constant_value(self) -> int:
        return self.terms.get(self.ring.mono.one, 0)

    def variables(self) -> list[int]:
        used = set()
        for exps, _ in self.exponent_items():
            used.update(i for i, e in enumerate(exps) if e)
        return sorted(used)

    # -- calculus and substitution --------------------------------------
    def derivative(self, v: int | str) -> "Polynomial":
        return differentiate(self, v)

    def evaluate(self, point: Sequence[int]) -> int:
        p = self.ring.p
        total = 0
        for exps, c in self.exponent_items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term = term * pow(int(x), e, p) % p
            total += term
        return total % p

    def substitute(self, images: Sequence["Polynomial"], target: PolyRing | None = None) -> "Polynomial":
        """Ring map sending variable i to ``images[i]`` (all in ``target``)."""
        tgt = target if target is not None else images[0].ring
        acc = tgt.zero()
        cache: dict[tuple[int, int], Polynomial] = {}
        for exps, c in self.exponent_items():
            term = tgt.constant(c)
            for i, e in enumerate(exps):
                if e:
                    pw = cache.get((i, e))
                    if pw is None:
                        pw = images[i] ** e
                        cache[(i, e)] = pw
                    term = term * pw
            acc = acc + term
        return acc

    def lift(self) -> "Polynomial":
        """The same terms viewed in the ambient (relation-free) ring."""
        return Polynomial(self.ring.ambient, dict(self.terms))

    # -- display ------------------------------------------------------
    def __str__(self):
        from .parse import format_polynomial
        return format_polynomial(self)

    def __repr__(self):
        return f"Polynomial({self})"


def mul_terms(ring: PolyRing, a: Terms, b: Terms) -> Terms:
    if len(a) < len(b):
        a, b = b, a
    p = ring.p
    one = ring.mono.one
    acc: dict[int, int] = {}
    get = acc.get
    for kb, cb in b.items():
        shift = kb - one
        for ka, ca in a.items():
            k = ka + shift
            acc[k] = get(k, 0) + ca * cb
    return {k: v % p for k, v in acc.items() if v % p}


def poly_mul(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.ring != g.ring:
        raise RingMismatchError("poly_mul across rings")
    return f * g


def differentiate(f: Polynomial, v: int | str) -> Polynomial:
    ring = f.ring
    i = ring.index[v] if isinstance(v, str) else v
    if not 0 <= i < ring.nvars:
        raise ValueError(f"variable index {i} out of range")
    mono = ring.mono
    unit = mono.var(i) - mono.one  # key offset of x_i
    p = ring.p
    out = {}
    for k, c in f.terms.items():
        e = mono.exponent(k, i)
        if e:
            v = c * e % p
            if v:
                out[k - unit] = v
    return ring.from_terms(out)


def linear_form(ring: PolyRing, coeffs: Sequence[int], variables: Sequence[int] | None = None) -> Polynomial:
    idx = range(ring.nvars) if variables is None else variables
    return ring.from_terms({ring.mono.var(i): int(c) for i, c in zip(idx, coeffs)})
