"""Hilbert series of monomial ideals and of the quotients they control.

Numerators are dictionaries ``{degree tuple: coefficient}``; for a polynomial
ring whose variables have degree vectors ``grading[i]`` the Hilbert series of
``R/M`` is ``N / prod(1 - t^grading[i])``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Sequence

Exps = tuple
Numer = dict


def minimalize(gens: Sequence[Exps]) -> list[Exps]:
    """Remove generators divisible by others (and duplicates)."""
    out: list[Exps] = []
    for g in sorted(set(gens), key=lambda e: (sum(e), e)):
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return out


def _mul(a: Numer, b: Numer) -> Numer:
    out: Numer = {}
    for da, ca in a.items():
        for db, cb in b.items():
            d = tuple(x + y for x, y in zip(da, db))
            out[d] = out.get(d, 0) + ca * cb
    return {d: c for d, c in out.items() if c}


def _add(a: Numer, b: Numer) -> Numer:
    out = dict(a)
    for d, c in b.items():
        v = out.get(d, 0) + c
        if v:
            out[d] = v
        else:
            out.pop(d, None)
    return out


def numerator(gens: Sequence[Exps], grading: Sequence[Sequence[int]]) -> Numer:
    """Hilbert series numerator of ``R / (gens)`` for monomial ``gens``."""
    grading = [tuple(g) for g in grading]
    ngr = len(grading[0]) if grading else 1
    zero = (0,) * ngr

    def deg(e: Exps) -> tuple:
        d = [0] * ngr
        for i, a in enumerate(e):
            if a:
                gi = grading[i]
                for j in range(ngr):
                    d[j] += a * gi[j]
        return tuple(d)

    def one_minus(e: Exps) -> Numer:
        return {zero: 1, deg(e): -1} if any(deg(e)) else {}

    def rec(ms: list[Exps]) -> Numer:
        if not ms:
            return {zero: 1}
        # split off generators sharing no variable with the others
        supports = [frozenset(i for i, a in enumerate(m) if a) for m in ms]
        count: dict[int, int] = {}
        for s in supports:
            for i in s:
                count[i] = count.get(i, 0) + 1
        lonely = [k for k, s in enumerate(supports) if all(count[i] == 1 for i in s)]
        if lonely:
            res = {zero: 1}
            for k in lonely:
                res = _mul(res, one_minus(ms[k]))
            rest = [m for k, m in enumerate(ms) if k not in set(lonely)]
            return _mul(res, rec(rest)) if rest else res
        i = max(count, key=lambda v: (count[v], -v))
        e = min(m[i] for m in ms if m[i])
        without = [m for m in ms if not m[i]]
        pivot = tuple(e if j == i else 0 for j in range(len(ms[0])))
        colon = minimalize([m[:i] + (max(m[i] - e, 0),) + m[i + 1:] for m in ms])
        a = _mul(rec(without), one_minus(pivot))
        b = _mul({deg(pivot): 1}, rec(colon))
        return _add(a, b)

    return rec(minimalize(gens))


def shift(n: Numer, d: Sequence[int]) -> Numer:
    return {tuple(a + b for a, b in zip(k, d)): c for k, c in n.items()}


def add(a: Numer, b: Numer) -> Numer:
    return _add(a, b)


def sub(a: Numer, b: Numer) -> Numer:
    return _add(a, {k: -c for k, c in b.items()})


def series(n: Numer, weights: Sequence[int], tmax: int, tmin: int = 0) -> dict[int, int]:
    """Coefficients t^tmin..t^tmax of a singly graded series N / prod(1-t^w)."""
    nvars = len(weights)
    if all(w == 1 for w in weights):
        def slice_dim(d):
            return comb(d + nvars - 1, nvars - 1) if d >= 0 else 0
    else:
        dims = [0] * (tmax - min(tmin, min((k[0] for k in n), default=0)) + 1)
        dims[0] = 1
        for w in weights:
            for d in range(w, len(dims)):
                dims[d] += dims[d - w]

        def slice_dim(d):
            return dims[d] if 0 <= d < len(dims) else 0
    return {t: sum(c * slice_dim(t - k[0]) for k, c in n.items()) for t in range(tmin, tmax + 1)}


@dataclass
class HilbertData:
    numerator: dict  # {degree: coefficient}
    nvars: int
    values: dict = field(default_factory=dict)
    dimension: int = 0
    degree: int = 0

    def polynomial_coefficients(self) -> list:
        """Hilbert polynomial as rational coefficients list (constant first)."""
        from fractions import Fraction
        d = self.dimension
        if d <= 0:
            return []
        # sample d points past the numerator degree and interpolate
        top = max(self.numerator, default=0) + 1
        xs = list(range(top, top + d))
        ys = [series({(k,): c for k, c in self.numerator.items()}, (1,) * self.nvars, x, x)[x] for x in xs]
        # Newton interpolation into monomial basis
        coeffs = [Fraction(0)] * d
        for j in range(d):
            basis = [Fraction(1)]
            denom = Fraction(1)
            for m in range(d):
                if m == j:
                    continue
                basis = [Fraction(0)] + basis
                for q in range(len(basis) - 1):
                    basis[q] -= xs[m] * basis[q + 1]
                denom *= xs[j] - xs[m]
            for q in range(d):
                coeffs[q] += ys[j] * basis[q] / denom
        return coeffs

    def hilbert_polynomial(self, t: int) -> int:
        coeffs = self.polynomial_coefficients()
        v = sum(c * t ** i for i, c in enumerate(coeffs))
        return int(v)


def dim_degree_from_numerator(n: dict, nvars: int) -> tuple[int, int]:
    """(Krull dimension, multiplicity) of a standard graded quotient."""
    coeffs = [0] * (max(n, default=0) + 1)
    for k, c in n.items():
        coeffs[k] += c
    if not any(coeffs):
        return -1, 0
    k = 0
    while sum(coeffs) == 0:
        # divide by (1 - t)
        q = []
        acc = 0
        for c in coeffs[:-1]:
            acc += c
            q.append(acc)
        coeffs = q
        k += 1
    return nvars - k, sum(coeffs)
