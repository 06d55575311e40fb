"""Arithmetic in the prime field Z/p."""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_PRIME = 101


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def inverse(a: int, p: int) -> int:
    """Inverse of ``a`` modulo ``p``; raises ZeroDivisionError for a = 0."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 is not invertible modulo {p}")
    return pow(a, -1, p)


def symmetric(a: int, p: int) -> int:
    """Representative of ``a`` in (-p/2, p/2], used for printing."""
    a %= p
    return a - p if a > p // 2 else a


@dataclass(frozen=True)
class FieldElement:
    """An element of Z/p. Mostly a convenience wrapper; the kernel works on ints."""

    value: int
    p: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if not is_prime(self.p) or self.p == 2:
            raise ValueError(f"modulus must be an odd prime, got {self.p}")
        object.__setattr__(self, "value", self.value % self.p)

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.p != self.p:
                raise ValueError("field mismatch")
            return other.value
        if isinstance(other, int):
            return other % self.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(o - self.value, self.p)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.value * o, self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.p)

    def inverse(self) -> "FieldElement":
        return FieldElement(inverse(self.value, self.p), self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return FieldElement(self.value * inverse(o, self.p), self.p)

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        return FieldElement(pow(self.value, n, self.p), self.p)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return self.value == other % self.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.p))

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.p})"


def field_inverse(a: FieldElement) -> FieldElement:
    return a.inverse()
