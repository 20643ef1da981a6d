from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from psisum.coeffs import CoeffTable, build_A, build_C
from psisum.conjecture import lagrange_coefficients, poly_eval
from psisum.exact import binomial_C
from psisum.hypersum import (
    Evaluator,
    HyperSumQuery,
    check_proc3,
    check_rising_form,
    check_seq1,
    check_seq2,
    check_stirling2_identity,
    hypersum_factored,
    hypersum_oracle,
    hypersum_power_sum,
    hypersum_psi,
    hypersum_psi_recurrence,
    hypersum_stirling2,
    s2_closed,
    verify_identities,
)
from psisum.psi import psi, psi_closed

C12 = build_C(12)
A12 = build_A(12)
EV = Evaluator(12, table=C12, atable=A12)


def test_oracle_examples():
    assert hypersum_oracle(2, 1, 3) == 14
    assert hypersum_oracle(5, 0, 3) == 243
    for m in range(0, 8):
        for a in range(0, 8):
            assert hypersum_oracle(m, a, 1) == 1


def test_psi_method_examples():
    assert hypersum_psi(4, 0, 3, C12) == 1 * psi(2, 3) - 2 * psi(3, 3) + 2 * psi(4, 3) == 81
    assert hypersum_psi(3, 1, 4, C12) == 1 + 8 + 27 + 64 == 100


def test_factored_examples():
    assert hypersum_factored(2, 3, 2, C12) == 7
    for m in range(2, 12):
        for a in range(6):
            assert hypersum_factored(m, a, 1, C12) == 1


def test_power_sum_specialization():
    for m in range(2, 12):
        for n in range(1, 15):
            assert hypersum_power_sum(m, n, C12) == hypersum_factored(m, 1, n, C12) == sum(
                i**m for i in range(1, n + 1))


def test_stirling2_examples():
    for a in range(6):
        for n in range(1, 10):
            assert hypersum_stirling2(1, a, n) == binomial_C(n + a, a + 1)
    assert hypersum_stirling2(3, 0, 4) == 64
    assert hypersum_stirling2(4, 2, 3) == hypersum_oracle(4, 2, 3)


def test_psi_recurrence_examples():
    for a in range(5):
        for n in range(1, 8):
            assert hypersum_psi_recurrence(2, a, n, A12) == psi_closed(2, a, n)
            assert hypersum_psi_recurrence(3, a, n, A12) == psi_closed(3, a, n)
    assert hypersum_psi_recurrence(4, 1, 2, A12) == 17


def test_s2_closed_form():
    for a in range(11):
        for n in range(1, 21):
            assert s2_closed(a, n) == hypersum_oracle(2, a, n)


def test_methods_agree_small_grid():
    for m in range(0, 9):
        for a in range(4):
            for n in range(1, 11):
                vals = EV.evaluate_all(m, a, n)
                assert set(vals.values()) == {hypersum_oracle(m, a, n)}, (m, a, n, vals)


@given(st.integers(0, 12), st.integers(1, 6), st.integers(2, 25))
def test_telescoping(m, a, n):
    for meth in EV.applicable(m):
        assert EV.evaluate(m, a, n, meth) - EV.evaluate(m, a, n - 1, meth) == EV.evaluate(m, a - 1, n, meth)


def test_applicable_methods():
    assert EV.applicable(0) == ["oracle"]
    assert EV.applicable(1) == ["stirling2", "oracle"]
    assert len(EV.applicable(2)) == 5


@pytest.mark.parametrize("query", [(1, 0, 2, "psi"), (0, 0, 2, "stirling2"), (2, 0, 0, "oracle"),
                                   (2, -1, 2, "factored"), (2, 0, 2, "magic")])
def test_query_validation(query):
    with pytest.raises(ValueError):
        HyperSumQuery(*query)


def test_table_too_small():
    with pytest.raises(ValueError):
        hypersum_psi(5, 0, 2, build_C(4))


def test_identity_spot_values():
    row4 = C12.row(4)
    assert row4[0] * 1 + row4[1] * 3 + row4[2] * 6 == 7 == (2**3 - 1) // 1
    # seq1 at n = 2: 2^m - 2 = T_m^2 - m
    for m in range(2, 12):
        t2 = sum(c * k * k for k, c in enumerate(C12.row(m), start=2))
        assert 2**m - 2 == t2 - m


def test_identity_checkers_pass():
    assert check_proc3(C12, 12, 12).ok
    assert check_stirling2_identity(C12, 8, 3, 8).ok
    assert check_seq1(C12, A12, 12, 12).ok
    assert check_seq2(C12, 12, 12).ok
    assert check_rising_form(C12, 12, 12).ok


def test_verify_identities_report_independent_of_jobs():
    r1 = verify_identities(8, 3, 9)
    r4 = verify_identities(8, 3, 9, jobs=4)
    assert [x.as_dict() for x in r1] == [x.as_dict() for x in r4]
    assert all(x.ok for x in r1)
    assert {x.name for x in r1} == {"binomial-row-identity", "stirling2-bracket-identity", "moment-identity"}


def test_verify_identities_reports_counterexample():
    rows = [list(r) for r in build_C(8).rows]
    rows[3][1] += 1  # corrupt c_{5,3}
    bad = CoeffTable(8, tuple(tuple(r) for r in rows), "corrupt")
    report = {r.name: r for r in verify_identities(8, 2, 8, table=bad)}
    proc3 = report["binomial-row-identity"]
    assert not proc3.ok
    assert proc3.counterexample == {"m": 5, "n": 2}
    assert proc3.as_dict()["status"] == "fail"


def test_factored_ratio_has_degree_m_minus_1():
    for m in range(1, 9):
        for a in range(4):
            ns = list(range(1, m + 1))
            ratio = lambda n: Fraction(hypersum_oracle(m, a, n), binomial_C(n + a, a + 1))
            coeffs = lagrange_coefficients(ns, [ratio(n) for n in ns])
            assert len(coeffs) == m
            for n in (m + 1, m + 5, m + 11):
                assert poly_eval(coeffs, n) == ratio(n)
