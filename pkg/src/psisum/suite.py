"""The full identity suite behind ``psisum verify``."""
from __future__ import annotations

from fractions import Fraction
from math import factorial

from .coeffs import a_coeff, build_A, build_C_binomial, build_C_invert_A, build_C_recurrence, t_moment
from .exact import harmonic, stirling1
from .hypersum import (
    Evaluator,
    IdentityResult,
    check_rising_form,
    check_seq2,
    hypersum_oracle,
    verify_identities,
)
from .psi import psi_closed, psi_recursive_oracle


def check_route_agreement(max_m: int, jobs: int = 1) -> IdentityResult:
    res = IdentityResult("route-agreement")
    rec = build_C_recurrence(max_m)
    inv = build_C_invert_A(max_m)
    binom = build_C_binomial(max_m, jobs=jobs)
    for m in range(2, max_m + 1):
        res.record(rec.row(m) == inv.row(m) == binom.row(m), m=m)
    return res


def check_row_sums(table, max_m: int) -> IdentityResult:
    res = IdentityResult("row-sum-one")
    for m in range(2, max_m + 1):
        res.record(sum(table.row(m)) == 1, m=m)
    return res


def check_diagonal(table, max_m: int) -> IdentityResult:
    res = IdentityResult("diagonal-factorial")
    for m in range(2, max_m + 1):
        res.record(table[m, m] == factorial(m - 2), m=m)
    return res


def check_harmonic_column(max_m: int) -> IdentityResult:
    res = IdentityResult("harmonic-column")
    for m in range(2, max_m + 1):
        res.record(a_coeff(m, 2) == 1 - harmonic(m - 2), m=m)
    return res


def check_first_moment(table, max_m: int) -> IdentityResult:
    res = IdentityResult("first-moment-equals-m")
    for m in range(2, max_m + 1):
        res.record(t_moment(m, 1, table) == m, m=m)
    return res


def check_closing_stirling(max_m: int) -> IdentityResult:
    """sum_{j=l}^m (-1)^(j-l) C(j,l) [m,j] = [m-1,l-1] - [m-1,l], checked
    through the three a_ml formulas which must agree."""
    res = IdentityResult("stirling1-alternating-identity")
    for m in range(2, max_m + 1):
        for l in range(2, m + 1):
            vals = {f: a_coeff(m, l, f) for f in ("cofa1", "cofa2", "seq3")}
            direct = Fraction(stirling1(m - 1, l - 1) - stirling1(m - 1, l), factorial(m - 2))
            res.record(len(set(vals.values())) == 1 and vals["seq3"] == direct, m=m, l=l)
    return res


def check_psi_closed(max_m: int, max_a: int, max_n: int) -> IdentityResult:
    res = IdentityResult("psi-closed-form")
    for m in range(2, max_m + 1):
        for a in range(max_a + 1):
            for n in range(1, max_n + 1):
                res.record(psi_closed(m, a, n) == psi_recursive_oracle(m, a, n), m=m, a=a, n=n)
    return res


def check_oracle_equivalence(ev: Evaluator, max_m: int, max_a: int, max_n: int) -> IdentityResult:
    res = IdentityResult("hypersum-methods-vs-oracle")
    for m in range(0, max_m + 1):
        for a in range(max_a + 1):
            for n in range(1, max_n + 1):
                truth = hypersum_oracle(m, a, n)
                vals = ev.evaluate_all(m, a, n)
                res.record(all(v == truth for v in vals.values()), m=m, a=a, n=n)
    return res


def run_suite(max_m: int, max_a: int, max_n: int, jobs: int = 1) -> list[IdentityResult]:
    """Every table, hyper-sum and moment identity over one grid."""
    size = max(max_m, max_n)
    table = build_C_recurrence(size)
    build_A(size)  # cross-checks the three a_ml formulas on construction
    ev = Evaluator(size, table=table)
    results = [
        check_route_agreement(max_m, jobs=jobs),
        check_row_sums(table, max_m),
        check_diagonal(table, max_m),
        check_harmonic_column(max_m),
        check_first_moment(table, max_m),
        check_closing_stirling(max_m),
        check_psi_closed(max_m, max_a, max_n),
        check_oracle_equivalence(ev, max_m, max_a, max_n),
    ]
    results += verify_identities(max_m, max_a, max_n, table=table, jobs=jobs)
    results += [check_seq2(table, max_m, max_n), check_rising_form(table, max_m, max_n)]
    return results
