"""Exact integer/rational primitives shared by every other module.

Integers are Python ints and rationals are :class:`fractions.Fraction`, so
nothing here ever touches floating point.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "Fraction",
    "StirlingTriangle",
    "binomial_B",
    "binomial_C",
    "factorial",
    "harmonic",
    "rising_factorial",
    "stirling1",
    "stirling2",
    "as_integer",
]


def as_integer(value, what="value"):
    """Return ``value`` as an int, asserting that it is integral."""
    if isinstance(value, int):
        return value
    value = Fraction(value)
    if value.denominator != 1:
        raise AssertionError(f"{what} is not an integer: {value}")
    return value.numerator


def binomial_B(a: int, b: int) -> int:
    """Symmetric binomial B_{a,b} = C(a+b, a)."""
    if a < 0 or b < 0:
        raise ValueError(f"binomial_B needs a, b >= 0, got ({a}, {b})")
    return comb(a + b, a)


def binomial_C(n: int, r: int) -> int:
    """C(n, r) = n(n-1)...(n-r+1)/r! for any integer n and r >= 0.

    Gives 0 for 0 <= n < r; negative ``n`` follows the falling-factorial
    definition.
    """
    if r < 0:
        raise ValueError(f"binomial_C needs r >= 0, got {r}")
    if n >= 0:
        return comb(n, r)
    num = 1
    for i in range(r):
        num *= n - i
    return num // factorial(r)


class StirlingTriangle:
    """Row-cached triangle of Stirling numbers, grown on demand.

    ``kind`` is ``"first"`` (unsigned, cycle numbers) or ``"second"``
    (set partitions). Reads of already-built rows take no lock; extension
    is serialized.
    """

    def __init__(self, kind: str):
        if kind not in ("first", "second"):
            raise ValueError(f"unknown Stirling kind {kind!r}")
        self.kind = kind
        self.rows: list[tuple[int, ...]] = [(1,)]
        self._lock = threading.Lock()

    def _extend(self, m: int) -> None:
        with self._lock:
            rows = self.rows
            while len(rows) <= m:
                r = len(rows)
                prev = rows[-1]
                row = [0] * (r + 1)
                for l in range(1, r + 1):
                    left = prev[l - 1]
                    up = prev[l] if l < r else 0
                    if self.kind == "first":
                        row[l] = left + (r - 1) * up
                    else:
                        row[l] = left + l * up
                # rebinding keeps concurrent readers on a consistent list
                rows = rows + [tuple(row)]
            self.rows = rows

    def row(self, m: int) -> tuple[int, ...]:
        if m < 0:
            raise ValueError(f"row index must be >= 0, got {m}")
        if m >= len(self.rows):
            self._extend(m)
        return self.rows[m]

    def __call__(self, m: int, l: int) -> int:
        if l < 0 or l > m:
            return 0
        return self.row(m)[l]


_FIRST = StirlingTriangle("first")
_SECOND = StirlingTriangle("second")


def stirling1(m: int, l: int) -> int:
    """Unsigned Stirling number of the first kind [m, l]."""
    return _FIRST(m, l)


def stirling2(m: int, k: int) -> int:
    """Stirling number of the second kind {m, k}."""
    return _SECOND(m, k)


def harmonic(m: int) -> Fraction:
    """H_m = 1 + 1/2 + ... + 1/m, with H_0 = 0."""
    if m < 0:
        raise ValueError(f"harmonic needs m >= 0, got {m}")
    return sum((Fraction(1, i) for i in range(1, m + 1)), Fraction(0))


def rising_factorial(x: int, n: int) -> int:
    """x (x+1) ... (x+n-1); the empty product for n = 0 is 1."""
    if n < 0:
        raise ValueError(f"rising_factorial needs n >= 0, got {n}")
    out = 1
    for i in range(n):
        out *= x + i
    return out
