"""Term orders on exponent vectors, realised as packed integer keys.

A monomial is encoded as a single non-negative integer whose natural integer
order *is* the term order.  The encoding is linear in the exponent vector, so
multiplying monomials is integer addition (minus the key of 1) and the
divisibility test reduces to a guarded subtraction.

Layout, from the most significant byte down: for each block, one byte with the
weighted degree of the block, followed by one byte per variable of the block
holding ``127 - exponent``, last variable first.  Within a block this is the
(weighted) degree reverse lexicographic order; blocks are compared
lexicographically, which gives elimination orders.
"""

from __future__ import annotations

from enum import Enum
from typing import Iterable, Sequence

FIELD_BITS = 8
FIELD_MASK = (1 << FIELD_BITS) - 1
EXP_MAX = 127  # complement base for exponent bytes; guard bit is 0x80
DEG_MAX = 255


class Cmp(Enum):
    LT = -1
    EQ = 0
    GT = 1


class MonomialOrder:
    """(Weighted) degrevlex on each block, blocks compared left to right."""

    __slots__ = (
        "nvars", "weights", "blocks", "kind", "nfields", "bits", "one",
        "guard", "expmask", "_units", "_exp_off", "_deg_off", "_block_of",
    )

    def __init__(self, nvars: int, weights: Sequence[int] | None = None,
                 blocks: Sequence[int] | None = None):
        if weights is None:
            weights = (1,) * nvars
        weights = tuple(int(w) for w in weights)
        if len(weights) != nvars or any(w <= 0 for w in weights):
            raise ValueError("weights must be positive, one per variable")
        if blocks is None:
            blocks = (nvars,)
        blocks = tuple(int(b) for b in blocks)
        if sum(blocks) != nvars or any(b <= 0 for b in blocks):
            raise ValueError("block sizes must be positive and sum to nvars")
        self.nvars = nvars
        self.weights = weights
        self.blocks = blocks
        if len(blocks) > 1:
            self.kind = "block"
        elif any(w != 1 for w in weights):
            self.kind = "weighted-degrevlex"
        else:
            self.kind = "degrevlex"

        self.nfields = len(blocks) + nvars
        self.bits = self.nfields * FIELD_BITS
        exp_off = [0] * nvars
        deg_off = []
        block_of = [0] * nvars
        field = 0
        start = 0
        for b, size in enumerate(blocks):
            deg_off.append((self.nfields - 1 - field) * FIELD_BITS)
            field += 1
            for i in reversed(range(start, start + size)):
                exp_off[i] = (self.nfields - 1 - field) * FIELD_BITS
                block_of[i] = b
                field += 1
            start += size
        self._exp_off = tuple(exp_off)
        self._deg_off = tuple(deg_off)
        self._block_of = tuple(block_of)
        self.one = sum(EXP_MAX << off for off in exp_off)
        self.guard = sum(0x80 << off for off in exp_off)
        self.expmask = sum(0x7F << off for off in exp_off)
        self._units = tuple(
            (weights[i] << deg_off[block_of[i]]) - (1 << exp_off[i])
            for i in range(nvars)
        )

    # -- construction -------------------------------------------------
    def encode(self, exps: Sequence[int]) -> int:
        if len(exps) != self.nvars:
            raise ValueError(f"expected {self.nvars} exponents, got {len(exps)}")
        key = self.one
        for e, u in zip(exps, self._units):
            if e:
                if e < 0 or e > EXP_MAX:
                    raise OverflowError(f"exponent {e} out of range")
                key += e * u
        if any(self.block_degree(key, b) > DEG_MAX for b in range(len(self.blocks))):
            raise OverflowError("degree out of range")
        return key

    def var(self, i: int) -> int:
        return self.one + self._units[i]

    def decode(self, key: int) -> tuple[int, ...]:
        return tuple(EXP_MAX - ((key >> off) & FIELD_MASK) for off in self._exp_off)

    # -- queries --------------------------------------------------------
    def degree(self, key: int) -> int:
        """Total weighted degree."""
        return sum((key >> off) & FIELD_MASK for off in self._deg_off)

    def block_degree(self, key: int, block: int) -> int:
        return (key >> self._deg_off[block]) & FIELD_MASK

    def exponent(self, key: int, i: int) -> int:
        return EXP_MAX - ((key >> self._exp_off[i]) & FIELD_MASK)

    def divides(self, a: int, b: int) -> bool:
        g = self.guard
        return ((a | g) - (b & self.expmask)) & g == g

    def mul(self, a: int, b: int) -> int:
        return a + b - self.one

    def div(self, a: int, b: int) -> int:
        """a / b, assuming b divides a."""
        return a - b + self.one

    def lcm(self, a: int, b: int) -> int:
        return self.encode([max(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def gcd(self, a: int, b: int) -> int:
        return self.encode([min(x, y) for x, y in zip(self.decode(a), self.decode(b))])

    def coprime(self, a: int, b: int) -> bool:
        return all(x == 0 or y == 0 for x, y in zip(self.decode(a), self.decode(b)))

    def block_ranges(self) -> list[range]:
        out, start = [], 0
        for size in self.blocks:
            out.append(range(start, start + size))
            start += size
        return out

    def same_as(self, other: "MonomialOrder") -> bool:
        return (self.nvars, self.weights, self.blocks) == (other.nvars, other.weights, other.blocks)

    def __repr__(self) -> str:
        return f"MonomialOrder({self.kind}, nvars={self.nvars}, blocks={self.blocks}, weights={self.weights})"


def compare_monomials(m1: Sequence[int], m2: Sequence[int], order: MonomialOrder) -> Cmp:
    """Compare two exponent vectors under ``order``."""
    if len(m1) != len(m2) or len(m1) != order.nvars:
        raise ValueError("exponent vectors of mismatched arity")
    a, b = order.encode(m1), order.encode(m2)
    return Cmp.GT if a > b else Cmp.LT if a < b else Cmp.EQ


def monomials_of_degree(nvars: int, d: int, weights: Sequence[int] | None = None) -> Iterable[tuple[int, ...]]:
    """All exponent vectors of (weighted) degree ``d``, in no particular order."""
    if weights is None:
        weights = (1,) * nvars
    if nvars == 0:
        if d == 0:
            yield ()
        return
    w = weights[0]
    for e in range(d // w + 1):
        for rest in monomials_of_degree(nvars - 1, d - e * w, weights[1:]):
            yield (e,) + rest
