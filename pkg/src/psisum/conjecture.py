"""Finite machine checks of the conjectured shape of the diagonals c_{m,m-j}.

Diagonal offset j = 2k (even) is normalized as

    c_{m,m-2k} = (m-2k-2)! C(m,2k) P(m),                      m >= 2k+2

and offset j = 2k+1 (odd) as

    c_{m,m-2k-1} = (m-2k-3)! (2k+3-m) C(m,2k+1) P(m),          m >= 2k+3

with P a degree-2k polynomial with rational coefficients. Each P is recovered
by exact Lagrange interpolation on the smallest admissible m values and
validated on the next few.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Sequence

from .coeffs import CoeffTable
from .exact import binomial_C

EVEN, ODD = "even", "odd"
VALIDATION_POINTS = 5


class InsufficientTableError(ValueError):
    pass


# -- exact polynomial helpers (coefficients in ascending order) -------------

def poly_eval(coeffs: Sequence[Fraction], x) -> Fraction:
    acc = Fraction(0)
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def poly_trim(coeffs):
    coeffs = list(coeffs)
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def lagrange_coefficients(xs: Sequence, ys: Sequence) -> list[Fraction]:
    """Coefficients of the unique polynomial of degree < len(xs) through the points."""
    if len(xs) != len(ys) or not xs:
        raise ValueError("need the same positive number of xs and ys")
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation nodes must be distinct")
    n = len(xs)
    out = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            # multiply basis by (x - xj)
            basis = [Fraction(0)] + basis
            for d in range(len(basis) - 1):
                basis[d] -= xj * basis[d + 1]
            denom *= xi - xj
        scale = Fraction(yi) / denom
        for d, b in enumerate(basis):
            out[d] += scale * b
    return poly_trim(out)


# -- the conjectured normal form ---------------------------------------------

def offset_of(k: int, parity: str) -> int:
    return 2 * k if parity == EVEN else 2 * k + 1


def first_m(k: int, parity: str) -> int:
    """Smallest m where the diagonal's normal form applies."""
    return 2 * k + 2 if parity == EVEN else 2 * k + 3


def prefactor(k: int, parity: str, m: int) -> int:
    """The factorial-binomial factor multiplying P(m)."""
    if parity == EVEN:
        return factorial(m - 2 * k - 2) * binomial_C(m, 2 * k)
    if parity == ODD:
        return factorial(m - 2 * k - 3) * (2 * k + 3 - m) * binomial_C(m, 2 * k + 1)
    raise ValueError(f"parity must be {EVEN!r} or {ODD!r}, got {parity!r}")


@dataclass(frozen=True)
class ConjecturePolynomial:
    """Normalizing polynomial P for diagonal offset ``offset_of(k, parity)``.

    ``validated`` and ``mismatches`` are only meaningful for fitted
    polynomials and do not take part in equality.
    """

    k: int
    parity: str
    coeffs: tuple[Fraction, ...]
    validated: bool = field(default=True, compare=False)
    mismatches: tuple[int, ...] = field(default=(), compare=False)

    @property
    def offset(self) -> int:
        return offset_of(self.k, self.parity)

    @property
    def degree(self) -> int:
        return len(poly_trim(self.coeffs)) - 1

    @property
    def leading(self) -> Fraction:
        return poly_trim(self.coeffs)[-1]

    def expected_leading(self) -> Fraction:
        return Fraction(1, 2 ** self.offset)

    def __call__(self, m) -> Fraction:
        return poly_eval(self.coeffs, m)

    def coefficient(self, m: int) -> Fraction:
        """Predicted c_{m, m-offset}."""
        return prefactor(self.k, self.parity, m) * self(m)

    def nonzero_signs_alternate(self) -> bool:
        """Nonzero coefficients alternate in sign, positive at the top degree."""
        signs = [1 if c > 0 else -1 for c in reversed(self.coeffs) if c != 0]
        return bool(signs) and signs[0] == 1 and all(a == -b for a, b in zip(signs, signs[1:]))

    def __str__(self):
        terms = [f"{c}*m^{j}" for j, c in enumerate(self.coeffs) if c != 0]
        return " + ".join(reversed(terms)) or "0"


def _normalized(table, k, parity, m):
    c = table[m, m - offset_of(k, parity)]
    return Fraction(c, prefactor(k, parity, m))


def fit_pattern(k: int, parity: str, table: CoeffTable,
                validation: int = VALIDATION_POINTS) -> ConjecturePolynomial:
    """Interpolate P through 2k+1 normalized table values and test it on
    ``validation`` further m. A failed validation comes back as a polynomial
    with ``validated=False`` and the offending m values in ``mismatches``.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if parity not in (EVEN, ODD):
        raise ValueError(f"parity must be {EVEN!r} or {ODD!r}, got {parity!r}")
    # odd prefactor vanishes at m = 2k+3, so sampling starts one later
    start = 2 * k + 2 if parity == EVEN else 2 * k + 4
    samples = list(range(start, start + 2 * k + 1))
    checks = list(range(samples[-1] + 1, samples[-1] + 1 + validation))
    need = checks[-1] if checks else samples[-1]
    if table.max_m < need:
        raise InsufficientTableError(
            f"fitting k={k} {parity} needs the table up to m={need}, have {table.max_m}"
        )
    coeffs = lagrange_coefficients(samples, [_normalized(table, k, parity, m) for m in samples])
    assert all(poly_eval(coeffs, m) == _normalized(table, k, parity, m) for m in samples)
    bad = tuple(m for m in checks if poly_eval(coeffs, m) != _normalized(table, k, parity, m))
    return ConjecturePolynomial(k, parity, tuple(coeffs), validated=not bad, mismatches=bad)


def fact4_fixtures() -> list[ConjecturePolynomial]:
    """Published brackets for the diagonals c_{m,m-j}, j = 0..7, ordered by j."""
    F = Fraction
    brackets = [
        [F(1)],
        [F(1, 2)],
        [F(46, 12), F(-23, 12), F(1, 4)],
        [F(11, 4), F(-9, 8), F(1, 8)],
        [F(1901, 30), F(-1747, 40), F(553, 48), F(-11, 8), F(1, 16)],
        [F(611, 12), F(-1489, 48), F(697, 96), F(-37, 48), F(1, 32)],
        [F(198721, 84), F(-1916141, 1008), F(1930, 3), F(-67513, 576), F(775, 64),
         F(-43, 64), F(1, 64)],
        [F(16083, 8), F(-425993, 288), F(14669, 32), F(-88093, 1152), F(2777, 384),
         F(-47, 128), F(1, 128)],
    ]
    return [
        ConjecturePolynomial(j // 2, EVEN if j % 2 == 0 else ODD, tuple(b))
        for j, b in enumerate(brackets)
    ]


# -- claim-by-claim report ----------------------------------------------------

@dataclass
class ClaimRecord:
    k: int
    parity: str
    claim: str
    ok: bool
    checked: int = 0
    failure_m: int | None = None
    detail: str = ""

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "parity": self.parity,
            "claim": self.claim,
            "status": "pass" if self.ok else "fail",
            "checked": self.checked,
            "failure_m": self.failure_m,
            "detail": self.detail,
        }


@dataclass
class ConjectureReport:
    k_max: int
    m_max: int
    records: list[ClaimRecord] = field(default_factory=list)
    polynomials: dict[tuple[int, str], ConjecturePolynomial] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.records)

    def falsifications(self) -> list[ClaimRecord]:
        return [r for r in self.records if not r.ok]


def _pointwise(rec: ClaimRecord, ms, pred) -> ClaimRecord:
    for m in ms:
        rec.checked += 1
        if not pred(m):
            rec.ok = False
            rec.failure_m = m
            break
    return rec


def check_conjecture(k_max: int, m_max: int, table: CoeffTable) -> ConjectureReport:
    """Check every structural claim for k = 0..k_max and both parities,
    pointwise for m up to ``m_max``."""
    if table.max_m < m_max:
        raise InsufficientTableError(f"table covers m <= {table.max_m}, m_max is {m_max}")
    report = ConjectureReport(k_max, m_max)
    add = report.records.append
    for k in range(k_max + 1):
        for parity in (EVEN, ODD):
            poly = fit_pattern(k, parity, table)
            report.polynomials[k, parity] = poly
            j = offset_of(k, parity)
            lo = first_m(k, parity)
            ms = range(lo, m_max + 1)

            add(ClaimRecord(k, parity, "fit-validates", poly.validated, VALIDATION_POINTS,
                            poly.mismatches[0] if poly.mismatches else None, str(poly)))
            add(_pointwise(ClaimRecord(k, parity, "normal-form", True), ms,
                           lambda m: poly.coefficient(m) == table[m, m - j]))
            add(ClaimRecord(k, parity, "degree", poly.degree == 2 * k, 1,
                            detail=f"degree {poly.degree}, expected {2 * k}"))
            add(ClaimRecord(k, parity, "leading-coefficient", poly.leading == poly.expected_leading(), 1,
                            detail=f"{poly.leading} vs {poly.expected_leading()}"))
            add(ClaimRecord(k, parity, "alternating-signs", poly.nonzero_signs_alternate(), 1,
                            detail=" ".join(str(c) for c in poly.coeffs)))
            add(_pointwise(ClaimRecord(k, parity, "bracket-positive", True), ms,
                           lambda m: poly(m) > 0))
            if parity == EVEN:
                add(_pointwise(ClaimRecord(k, parity, "positive-integer", True), ms,
                               lambda m: isinstance(table[m, m - j], int) and table[m, m - j] > 0))
                if lo <= m_max:
                    ok = table[lo, 2] == 1
                    add(ClaimRecord(k, parity, "boundary c_{2k+2,2} = 1", ok, 1,
                                    None if ok else lo, f"c_{lo},2 = {table[lo, 2]}"))
            else:
                add(_pointwise(ClaimRecord(k, parity, "negative-integer", True), range(lo + 1, m_max + 1),
                               lambda m: isinstance(table[m, m - j], int) and table[m, m - j] < 0))
                if lo <= m_max:
                    ok = table[lo, 2] == 0
                    add(ClaimRecord(k, parity, "boundary c_{2k+3,2} = 0", ok, 1,
                                    None if ok else lo, f"c_{lo},2 = {table[lo, 2]}"))
    return report
