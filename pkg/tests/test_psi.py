import pytest
from hypothesis import given, strategies as st

from psisum.psi import PsiQuery, psi, psi_alt, psi_closed, psi_recursive_oracle


def test_psi_values():
    assert all(psi(m, 1) == 1 for m in range(2, 30))
    assert psi(2, 3) == 9
    assert psi(4, 3) == 63


@pytest.mark.parametrize("m", range(2, 12))
def test_psi_alternative_form(m):
    for n in range(1, 15):
        assert psi(m, n) == psi_alt(m, n)


def test_psi_closed_examples():
    assert psi_closed(2, 1, 3) == 14
    for m in range(2, 9):
        for a in range(6):
            assert psi_closed(m, a, 1) == 1
        for n in range(1, 9):
            assert psi_closed(m, 0, n) == psi(m, n)


def test_oracle_examples():
    assert psi_recursive_oracle(2, 1, 3) == 1 + 4 + 9
    assert psi_recursive_oracle(3, 2, 2) == 10
    assert psi_recursive_oracle(5, 0, 4) == psi(5, 4)


def test_closed_form_matches_oracle_grid():
    for m in range(2, 11):
        for a in range(5):
            for n in range(1, 13):
                assert psi_closed(m, a, n) == psi_recursive_oracle(m, a, n), (m, a, n)


def test_telescoping_grid():
    for m in range(2, 11):
        for a in range(1, 5):
            for n in range(2, 13):
                assert psi_closed(m, a, n) - psi_closed(m, a, n - 1) == psi_closed(m, a - 1, n)


@given(st.integers(2, 25), st.integers(0, 12), st.integers(1, 40))
def test_closed_form_is_integral_everywhere(m, a, n):
    # psi_closed raises if the rational term is not an integer
    v = psi_closed(m, a, n)
    assert isinstance(v, int) and v >= 1


@pytest.mark.parametrize("args", [(1, 0, 3), (2, -1, 3), (2, 0, 0)])
def test_domain_errors(args):
    with pytest.raises(ValueError):
        psi_closed(*args)
    with pytest.raises(ValueError):
        PsiQuery(*args)
    with pytest.raises(ValueError):
        psi_recursive_oracle(*args)
