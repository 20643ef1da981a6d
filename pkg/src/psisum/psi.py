"""The basis polynomials psi_m(n) and their a-fold iterated sums."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate

from .exact import as_integer, binomial_B


@dataclass(frozen=True)
class PsiQuery:
    m: int
    a: int
    n: int

    def __post_init__(self):
        _check(self.m, self.a, self.n)


def _check(m, a, n):
    if m < 2:
        raise ValueError(f"psi basis needs m >= 2, got m={m}")
    if a < 0:
        raise ValueError(f"summation order must be >= 0, got a={a}")
    if n < 1:
        raise ValueError(f"argument must be >= 1, got n={n}")


def psi(m: int, n: int) -> int:
    """psi_m(n) = n + (m-1)(n-1) B_{m-1,n-1}."""
    _check(m, 0, n)
    return n + (m - 1) * (n - 1) * binomial_B(m - 1, n - 1)


def psi_alt(m: int, n: int) -> int:
    """Second form B_{1,n-1} + m(m-1) B_{m,n-2}, with B_{m,-1} = 0."""
    _check(m, 0, n)
    tail = binomial_B(m, n - 2) if n >= 2 else 0
    return binomial_B(1, n - 1) + m * (m - 1) * tail


def psi_closed(m: int, a: int, n: int) -> int:
    """Closed form of psi_m^(a)(n).

    B_{a+1,n-1} + m(m-1)/(m+a) * (n-1) * B_{m+a-1,n-1}; the second term is
    formed as a Fraction and must come out integral.
    """
    _check(m, a, n)
    second = Fraction(m * (m - 1), m + a) * (n - 1) * binomial_B(m + a - 1, n - 1)
    return binomial_B(a + 1, n - 1) + as_integer(second, f"psi_closed({m},{a},{n})")


def psi_recursive_oracle(m: int, a: int, n: int) -> int:
    """psi_m^(a)(n) by literal iterated prefix sums of psi_m(1..n)."""
    _check(m, a, n)
    values = [psi(m, i) for i in range(1, n + 1)]
    for _ in range(a):
        values = list(accumulate(values))
    return values[-1]
