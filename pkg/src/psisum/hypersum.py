"""Hyper-sums S_m^(a)(n): the brute-force oracle, four closed routes, and
grid checks of the identities that tie the coefficient tables together.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import accumulate
from math import factorial

from .coeffs import ATable, CoeffTable, a_coeff_extended, build_A, build_C, t_moment
from .exact import as_integer, binomial_C, rising_factorial, stirling2
from .psi import psi_closed

METHODS = ("psi", "factored", "stirling2", "psi-recurrence", "oracle")


def _check_args(m, a, n, min_m=0):
    if m < min_m:
        raise ValueError(f"this method needs m >= {min_m}, got m={m}")
    if a < 0:
        raise ValueError(f"a must be >= 0, got {a}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")


def _need_row(table, m):
    if table.max_m < m:
        raise ValueError(f"table covers m <= {table.max_m}, need m = {m}")


@dataclass(frozen=True)
class HyperSumQuery:
    m: int
    a: int
    n: int
    method: str = "oracle"

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        _check_args(self.m, self.a, self.n, min_m=_MIN_M[self.method])


_MIN_M = {"psi": 2, "factored": 2, "psi-recurrence": 2, "stirling2": 1, "oracle": 0}


def hypersum_oracle(m: int, a: int, n: int) -> int:
    """a-fold iterated prefix sum of 1^m, 2^m, ..., n^m."""
    _check_args(m, a, n)
    values = [i**m for i in range(1, n + 1)]
    for _ in range(a):
        values = list(accumulate(values))
    return values[-1]


def hypersum_psi(m: int, a: int, n: int, table: CoeffTable) -> int:
    """sum_{k=2}^m c_mk psi_k^(a)(n)."""
    _check_args(m, a, n, 2)
    _need_row(table, m)
    return sum(c * psi_closed(k, a, n) for k, c in enumerate(table.row(m), start=2))


def factored_bracket(m: int, a: int, n: int, table: CoeffTable) -> Fraction:
    """sum_k c_mk C(n+a+k-2, k-2) / C(a+k, k), the inner sum of the factored form."""
    return sum(
        (Fraction(c * binomial_C(n + a + k - 2, k - 2), binomial_C(a + k, k))
         for k, c in enumerate(table.row(m), start=2)),
        Fraction(0),
    )


def hypersum_factored(m: int, a: int, n: int, table: CoeffTable) -> int:
    """C(n+a, a+1) * [1 + (n-1)(a+1) * factored_bracket]."""
    _check_args(m, a, n, 2)
    _need_row(table, m)
    inner = 1 + (n - 1) * (a + 1) * factored_bracket(m, a, n, table)
    return as_integer(binomial_C(n + a, a + 1) * inner, f"factored S_{m}^({a})({n})")


def hypersum_power_sum(m: int, n: int, table: CoeffTable) -> int:
    """Ordinary power sum (a = 1) via n(n+1)/2 [1 + 2(n-1) sum_k c_mk C(n+k-1, k-2)/(k+1)]."""
    _check_args(m, 1, n, 2)
    _need_row(table, m)
    s = sum(
        (Fraction(c * binomial_C(n + k - 1, k - 2), k + 1) for k, c in enumerate(table.row(m), start=2)),
        Fraction(0),
    )
    return as_integer(Fraction(n * (n + 1), 2) * (1 + 2 * (n - 1) * s), f"S_{m}^(1)({n})")


def hypersum_stirling2(m: int, a: int, n: int) -> int:
    """sum_{k=1}^m k! {m,k} C(n+a, a+k)."""
    _check_args(m, a, n, 1)
    return sum(factorial(k) * stirling2(m, k) * binomial_C(n + a, a + k) for k in range(1, m + 1))


def hypersum_psi_recurrence(m: int, a: int, n: int, atable: ATable) -> int:
    """S_m = (m-2)! [psi_m^(a)(n) - sum_{i=2}^{m-1} a_mi S_i], built upward from S_2 = psi_2^(a)."""
    _check_args(m, a, n, 2)
    _need_row(atable, m)
    S: dict[int, int] = {}
    for j in range(2, m + 1):
        rest = sum((atable[j, i] * S[i] for i in range(2, j)), Fraction(0))
        S[j] = as_integer(factorial(j - 2) * (psi_closed(j, a, n) - rest), f"S_{j}^({a})({n})")
    return S[m]


def s2_closed(a: int, n: int) -> int:
    """(2n+a)/(a+2) * C(n+a, a+1), the closed form of S_2^(a)(n)."""
    return as_integer(Fraction(2 * n + a, a + 2) * binomial_C(n + a, a + 1), "S_2 closed form")


class Evaluator:
    """Bundles the tables needed by every method for m up to ``max_m``."""

    def __init__(self, max_m: int, table: CoeffTable | None = None, atable: ATable | None = None):
        self.max_m = max(max_m, 2)
        self.table = table if table is not None else build_C(self.max_m)
        self.atable = atable if atable is not None else build_A(self.max_m, check=False)

    def applicable(self, m: int) -> list[str]:
        return [meth for meth in METHODS if m >= _MIN_M[meth]]

    def evaluate(self, m: int, a: int, n: int, method: str) -> int:
        HyperSumQuery(m, a, n, method)
        if method == "oracle":
            return hypersum_oracle(m, a, n)
        if method == "stirling2":
            return hypersum_stirling2(m, a, n)
        if method == "psi":
            return hypersum_psi(m, a, n, self.table)
        if method == "factored":
            return hypersum_factored(m, a, n, self.table)
        return hypersum_psi_recurrence(m, a, n, self.atable)

    def evaluate_all(self, m: int, a: int, n: int) -> dict[str, int]:
        return {meth: self.evaluate(m, a, n, meth) for meth in self.applicable(m)}


@dataclass
class IdentityResult:
    """Outcome of checking one identity over a grid."""

    name: str
    checked: int = 0
    passed: int = 0
    counterexample: dict | None = None
    notes: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked == self.passed and self.checked > 0

    def record(self, ok: bool, **point) -> None:
        self.checked += 1
        if ok:
            self.passed += 1
        elif self.counterexample is None:
            self.counterexample = point

    def merge(self, other: "IdentityResult") -> None:
        self.checked += other.checked
        self.passed += other.passed
        if self.counterexample is None:
            self.counterexample = other.counterexample

    def as_dict(self) -> dict:
        return {
            "identity": self.name,
            "status": "pass" if self.ok else "fail",
            "checked": self.checked,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }


def _proc3_lhs(m, n, table):
    return sum(c * binomial_C(n + k - 2, n) for k, c in enumerate(table.row(m), start=2))


def check_proc3(table: CoeffTable, max_m: int, max_n: int, min_m: int = 2) -> IdentityResult:
    """sum_k c_mk C(n+k-2, n) = (n^(m-1) - 1)/(n-1) for 2 <= m, n."""
    res = IdentityResult("binomial-row-identity")
    for m in range(min_m, max_m + 1):
        for n in range(2, max_n + 1):
            lhs = _proc3_lhs(m, n, table)
            res.record(lhs * (n - 1) == n ** (m - 1) - 1, m=m, n=n)
    return res


def check_stirling2_identity(table: CoeffTable, max_m: int, max_a: int, max_n: int,
                             min_m: int = 2) -> IdentityResult:
    """factored_bracket = (1/(n(n-1))) C(n+a, a)^{-1} sum_{k>=2} k!{m,k} C(n+a, a+k)."""
    res = IdentityResult("stirling2-bracket-identity")
    for a in range(0, max_a + 1):
        for m in range(min_m, max_m + 1):
            for n in range(2, max_n + 1):
                lhs = factored_bracket(m, a, n, table)
                s = sum(factorial(k) * stirling2(m, k) * binomial_C(n + a, a + k) for k in range(2, m + 1))
                rhs = Fraction(s, n * (n - 1) * binomial_C(n + a, a))
                res.record(lhs == rhs, m=m, a=a, n=n)
    return res


def check_seq1(table: CoeffTable, atable: ATable, max_m: int, max_n: int,
               min_m: int = 2) -> IdentityResult:
    """n^m - n = -T_m^1 + sum_{l=2}^n a_nl T_m^l for n >= 2."""
    res = IdentityResult("moment-identity")
    for m in range(min_m, max_m + 1):
        T = [t_moment(m, l, table) for l in range(0, max_n + 1)]
        for n in range(2, max_n + 1):
            rhs = -T[1] + sum((atable[n, l] * T[l] for l in range(2, n + 1)), Fraction(0))
            res.record(rhs == n**m - n, m=m, n=n)
    return res


def check_seq2(table: CoeffTable, max_m: int, max_n: int) -> IdentityResult:
    """n^m - n = sum_{l=0}^n A_nl T_m^l, with A_nl the alternating Stirling sum; A_n0 = 0, A_n1 = -1."""
    res = IdentityResult("moment-identity-full")
    for n in range(2, max_n + 1):
        ends_ok = a_coeff_extended(n, 0) == 0 and a_coeff_extended(n, 1) == -1
        res.record(ends_ok, n=n, claim="A_n0 = 0 and A_n1 = -1")
    for m in range(2, max_m + 1):
        T = [t_moment(m, l, table) for l in range(0, max_n + 1)]
        for n in range(2, max_n + 1):
            rhs = sum((a_coeff_extended(n, l) * T[l] for l in range(0, n + 1)), Fraction(0))
            res.record(rhs == n**m - n, m=m, n=n)
    return res


def check_rising_form(table: CoeffTable, max_m: int, max_n: int) -> IdentityResult:
    """n^m - n = (1/(n-2)!) sum_k c_mk (k-1)^(rising n)."""
    res = IdentityResult("rising-factorial-identity")
    for m in range(2, max_m + 1):
        for n in range(2, max_n + 1):
            s = sum(c * rising_factorial(k - 1, n) for k, c in enumerate(table.row(m), start=2))
            res.record(Fraction(s, factorial(n - 2)) == n**m - n, m=m, n=n)
    return res


def verify_identities(max_m: int, max_a: int, max_n: int, table: CoeffTable | None = None,
                      jobs: int = 1) -> list[IdentityResult]:
    """Check the binomial-row identity, the Stirling-second-kind bracket
    identity and the moment identity over the given grid.

    Work is split by m; with ``jobs > 1`` the slices run on a thread pool and
    are merged in m order, so the report does not depend on ``jobs``.
    """
    if min(max_m, max_a + 2, max_n) < 2:
        raise ValueError("bounds must be >= 2")
    need = max(max_m, max_n)
    if table is None or table.max_m < need:
        table = build_C(need)
    atable = build_A(need, check=False)

    def one(m):
        return [
            check_proc3(table, m, max_n, min_m=m),
            check_stirling2_identity(table, m, max_a, max_n, min_m=m),
            check_seq1(table, atable, m, max_n, min_m=m),
        ]

    ms = list(range(2, max_m + 1))
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(one, ms))
    else:
        parts = [one(m) for m in ms]

    merged = [IdentityResult(r.name) for r in parts[0]]
    for part in parts:
        for acc, r in zip(merged, part):
            acc.merge(r)
    return merged
