"""Dense univariate polynomials over Z/p (coefficient lists, constant first)."""

from __future__ import annotations

import random
from typing import Sequence

from ..core.ring import Polynomial


def trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def pmod(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    trim(a)
    b = trim([x % p for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    inv = pow(b[-1], -1, p)
    db = len(b) - 1
    while len(a) - 1 >= db and a:
        c = a[-1] * inv % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        trim(a)
    return a


def pmul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim([c % p for c in out])


def pgcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = trim([x % p for x in a])
    b = trim([x % p for x in b])
    while b:
        a, b = b, pmod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [x * inv % p for x in a]
    return a


def ppowmod(base: Sequence[int], e: int, mod: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = pmod(base, mod, p)
    while e:
        if e & 1:
            result = pmod(pmul(result, base, p), mod, p)
        e >>= 1
        if e:
            base = pmod(pmul(base, base, p), mod, p)
    return result


def evaluate(a: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def _split_roots(g: list[int], p: int, rng: random.Random) -> list[int]:
    """Roots of a monic squarefree g that splits into distinct linear factors."""
    d = len(g) - 1
    if d == 0:
        return []
    if d == 1:
        return [(-g[0]) % p]
    while True:
        a = rng.randrange(p)
        h = ppowmod([a, 1], (p - 1) // 2, g, p)
        h = h + [0] * max(0, 1 - len(h))
        h[0] = (h[0] - 1) % p
        f = pgcd(g, trim(h), p)
        if 0 < len(f) - 1 < d:
            q = _divide_exact(g, f, p)
            return _split_roots(f, p, rng) + _split_roots(q, p, rng)


def _divide_exact(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a = [x % p for x in a]
    q = [0] * (len(a) - len(b) + 1)
    inv = pow(b[-1], -1, p)
    for s in range(len(q) - 1, -1, -1):
        c = a[s + len(b) - 1] * inv % p
        q[s] = c
        for i, bc in enumerate(b):
            a[s + i] = (a[s + i] - c * bc) % p
    return trim(q)


def roots_mod_p(coeffs: Sequence[int], p: int, scan_limit: int = 4096) -> list[int]:
    """Distinct roots in Z/p of the polynomial with the given coefficients."""
    f = trim([c % p for c in coeffs])
    if not f:
        raise ValueError("roots of the zero polynomial")
    if len(f) == 1:
        return []
    # g = gcd(f, x^p - x) collects the distinct rational roots
    xp = ppowmod([0, 1], p, f, p)
    xp = xp + [0] * max(0, 2 - len(xp))
    xp[1] = (xp[1] - 1) % p
    g = pgcd(f, trim(xp), p)
    if len(g) <= 1:
        return []
    if p <= scan_limit:
        return [x for x in range(p) if evaluate(g, x, p) == 0]
    return sorted(_split_roots(g, p, random.Random(0)))


def univariate_roots(f: Polynomial | Sequence[int], p: int | None = None) -> list[int]:
    """Roots in Z/p of a univariate polynomial.

    ``f`` may be a coefficient list (constant first, ``p`` required) or a
    Polynomial involving at most one variable; a homogeneous form in one
    variable has only the root 0.
    """
    if isinstance(f, Polynomial):
        if not f:
            raise ValueError("roots of the zero polynomial")
        p = f.ring.p
        used = f.variables()
        if len(used) > 1:
            raise ValueError("polynomial is not univariate")
        if not used:
            return []
        v = used[0]
        deg = max(e[v] for e, _ in f.exponent_items())
        coeffs = [0] * (deg + 1)
        for e, c in f.exponent_items():
            coeffs[e[v]] = c
        return roots_mod_p(coeffs, p)
    if p is None:
        raise ValueError("modulus required for coefficient lists")
    return roots_mod_p(list(f), p)
