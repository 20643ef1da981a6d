"""Coefficient tables a_ml (psi_m in the monomial basis) and c_mk (n^m in
the psi basis), plus the moments T_m^alpha of the c rows.

All tables are indexed from 2 in both directions; rows and columns below 2
are never stored because a_{m,0} = a_{m,1} = 0.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Iterator, Sequence

from .exact import as_integer, binomial_C, stirling1

ROUTES = ("recurrence", "invert-A", "binomial-system")
A_FORMULAS = ("cofa1", "cofa2", "seq3")


def _check_triangle(m, l):
    if not 2 <= l <= m:
        raise ValueError(f"(m, l) = ({m}, {l}) is outside the triangle 2 <= l <= m")


def a_coeff(m: int, l: int, formula: str = "cofa1") -> Fraction:
    """Coefficient of n^l in psi_m(n), by one of three Stirling formulas.

    ``cofa1``: ([m-1, l-1] - [m-1, l]) / (m-2)!
    ``cofa2``: ([m, l] - m [m-1, l]) / (m-2)!
    ``seq3``:  sum_{j=l}^m (-1)^(j-l) C(j, l) [m, j] / (m-2)!
    """
    _check_triangle(m, l)
    if formula == "cofa1":
        num = stirling1(m - 1, l - 1) - stirling1(m - 1, l)
    elif formula == "cofa2":
        num = stirling1(m, l) - m * stirling1(m - 1, l)
    elif formula == "seq3":
        num = _alternating_stirling_sum(m, l)
    else:
        raise ValueError(f"unknown a_ml formula {formula!r}; choose from {A_FORMULAS}")
    return Fraction(num, factorial(m - 2))


def _alternating_stirling_sum(m, l):
    return sum((-1) ** (j - l) * binomial_C(j, l) * stirling1(m, j) for j in range(l, m + 1))


def a_coeff_extended(m: int, l: int) -> Fraction:
    """The seq3 sum for any 0 <= l <= m (so l = 0, 1 are included).

    Used to check the coefficient identity n^m - n = sum_l A_nl T_m^l,
    which forces the l = 0 and l = 1 entries to 0 and -1.
    """
    if m < 2 or not 0 <= l <= m:
        raise ValueError(f"need m >= 2 and 0 <= l <= m, got ({m}, {l})")
    return Fraction(_alternating_stirling_sum(m, l), factorial(m - 2))


@dataclass(frozen=True)
class ATable:
    """Lower triangle of a_ml for 2 <= l <= m <= max_m."""

    max_m: int
    rows: tuple[tuple[Fraction, ...], ...]

    def __getitem__(self, ml: tuple[int, int]) -> Fraction:
        m, l = ml
        if not 2 <= m <= self.max_m:
            raise IndexError(f"row {m} outside 2..{self.max_m}")
        if l < 0 or l > m:
            raise IndexError(f"column {l} outside 0..{m}")
        if l < 2:
            return Fraction(0)
        return self.rows[m - 2][l - 2]

    def row(self, m: int) -> tuple[Fraction, ...]:
        return self.rows[m - 2]

    def entries(self) -> Iterator[tuple[int, int, Fraction]]:
        for m, row in enumerate(self.rows, start=2):
            for l, v in enumerate(row, start=2):
                yield m, l, v


def build_A(max_m: int, check: bool = True) -> ATable:
    """a_ml triangle from cofa1, cross-checked against cofa2 and seq3."""
    if max_m < 2:
        raise ValueError(f"max_m must be >= 2, got {max_m}")
    rows = []
    for m in range(2, max_m + 1):
        row = []
        for l in range(2, m + 1):
            v = a_coeff(m, l, "cofa1")
            if check:
                for other in ("cofa2", "seq3"):
                    w = a_coeff(m, l, other)
                    assert w == v, f"a_{m},{l}: cofa1 gives {v}, {other} gives {w}"
            row.append(v)
        rows.append(tuple(row))
    return ATable(max_m, tuple(rows))


@dataclass(frozen=True)
class CoeffTable:
    """Integer triangle c_mk for 2 <= k <= m <= max_m.

    ``route`` records which construction produced it and is ignored by
    equality, so tables from different routes compare by content.
    """

    max_m: int
    rows: tuple[tuple[int, ...], ...]
    route: str = field(default="recurrence", compare=False)

    def __getitem__(self, mk: tuple[int, int]) -> int:
        m, k = mk
        if not 2 <= m <= self.max_m:
            raise IndexError(f"row {m} outside 2..{self.max_m}")
        if k < 2 or k > m:
            return 0
        return self.rows[m - 2][k - 2]

    def row(self, m: int) -> tuple[int, ...]:
        if not 2 <= m <= self.max_m:
            raise IndexError(f"row {m} outside 2..{self.max_m}")
        return self.rows[m - 2]

    def entries(self) -> Iterator[tuple[int, int, int]]:
        for m, row in enumerate(self.rows, start=2):
            for k, v in enumerate(row, start=2):
                yield m, k, v

    def flat(self) -> list[int]:
        """Row-by-row linearization (m = 2 first, k ascending)."""
        return [v for _, _, v in self.entries()]


def build_C_recurrence(max_m: int, atable: ATable | None = None) -> CoeffTable:
    """c_mm = (m-2)!, c_mk = -(m-2)! sum_{l=k}^{m-1} a_ml c_lk."""
    if max_m < 2:
        raise ValueError(f"max_m must be >= 2, got {max_m}")
    A = atable if atable is not None and atable.max_m >= max_m else build_A(max_m, check=False)
    rows: list[tuple[int, ...]] = []
    for m in range(2, max_m + 1):
        f = factorial(m - 2)
        row = []
        for k in range(2, m):
            s = sum(A[m, l] * rows[l - 2][k - 2] for l in range(k, m))
            row.append(as_integer(-f * s, f"c_{m},{k}"))
        row.append(f)
        rows.append(tuple(row))
    return CoeffTable(max_m, tuple(rows), "recurrence")


class RationalMatrix:
    """Dense square matrix of Fractions with exact solves.

    Elimination is Bareiss fraction-free without pivoting; every leading
    principal minor must be nonzero.
    """

    def __init__(self, entries: Sequence[Sequence]):
        self.entries = [[Fraction(x) for x in row] for row in entries]
        self.dim = len(self.entries)
        if any(len(row) != self.dim for row in self.entries):
            raise ValueError("RationalMatrix must be square")

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        n = self.dim
        if other.dim != n:
            raise ValueError("dimension mismatch")
        return RationalMatrix(
            [[sum(self.entries[i][l] * other.entries[l][j] for l in range(n)) for j in range(n)]
             for i in range(n)]
        )

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in row] for row in self.entries]})"

    def is_lower_triangular(self) -> bool:
        return all(self.entries[i][j] == 0 for i in range(self.dim) for j in range(i + 1, self.dim))

    def solve_many(self, rhs_columns: Sequence[Sequence]) -> list[list[Fraction]]:
        """Solve M x = b for each b in ``rhs_columns``."""
        n = self.dim
        r = len(rhs_columns)
        aug = [self.entries[i][:] + [Fraction(b[i]) for b in rhs_columns] for i in range(n)]
        prev = Fraction(1)
        for k in range(n):
            pivot = aug[k][k]
            assert pivot != 0, f"zero leading minor at position {k}"
            for i in range(k + 1, n):
                lead = aug[i][k]
                row_i, row_k = aug[i], aug[k]
                for j in range(k + 1, n + r):
                    row_i[j] = (row_i[j] * pivot - lead * row_k[j]) / prev
                row_i[k] = Fraction(0)
            prev = pivot
        out = []
        for c in range(r):
            x = [Fraction(0)] * n
            for i in range(n - 1, -1, -1):
                s = aug[i][n + c] - sum(aug[i][j] * x[j] for j in range(i + 1, n))
                x[i] = s / aug[i][i]
            out.append(x)
        return out

    def solve(self, b: Sequence) -> list[Fraction]:
        return self.solve_many([b])[0]

    def inverse(self) -> "RationalMatrix":
        n = self.dim
        cols = self.solve_many([[int(i == j) for i in range(n)] for j in range(n)])
        return RationalMatrix([[cols[j][i] for j in range(n)] for i in range(n)])

    def lower_triangular_inverse(self) -> "RationalMatrix":
        """Inverse of a lower-triangular matrix by forward substitution."""
        assert self.is_lower_triangular(), "matrix is not lower triangular"
        n = self.dim
        L = self.entries
        X = [[Fraction(0)] * n for _ in range(n)]
        for j in range(n):
            assert L[j][j] != 0, f"zero diagonal at {j}"
            for i in range(j, n):
                s = Fraction(int(i == j)) - sum(L[i][l] * X[l][j] for l in range(j, i))
                X[i][j] = s / L[i][i]
        return RationalMatrix(X)


def a_matrix(atable: ATable) -> RationalMatrix:
    """Dense A_m = (a_ml), 0-based: entry [i][j] is a_{i+2, j+2}."""
    n = atable.max_m - 1
    return RationalMatrix(
        [[atable[i + 2, j + 2] if j <= i else 0 for j in range(n)] for i in range(n)]
    )


def _table_from_matrix(M: RationalMatrix, route: str) -> CoeffTable:
    n = M.dim
    rows = tuple(
        tuple(as_integer(M[i, j], f"c_{i + 2},{j + 2}") for j in range(i + 1)) for i in range(n)
    )
    for i in range(n):
        for j in range(i + 1, n):
            assert M[i, j] == 0, f"c_{i + 2},{j + 2} above the diagonal is {M[i, j]}"
    return CoeffTable(n + 1, rows, route)


def build_C_invert_A(max_m: int, atable: ATable | None = None) -> CoeffTable:
    """C_m = A_m^{-1}, the triangular inverse of the a_ml matrix."""
    if max_m < 2:
        raise ValueError(f"max_m must be >= 2, got {max_m}")
    A = atable if atable is not None and atable.max_m == max_m else build_A(max_m, check=False)
    return _table_from_matrix(a_matrix(A).lower_triangular_inverse(), "invert-A")


def binomial_system(m: int) -> tuple[RationalMatrix, list[int]]:
    """Matrix C(n+k-2, n) (rows n, columns k, both 2..m) and RHS (n^(m-1)-1)/(n-1)."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    idx = range(2, m + 1)
    M = RationalMatrix([[binomial_C(n + k - 2, n) for k in idx] for n in idx])
    rhs = []
    for n in idx:
        q, r = divmod(n ** (m - 1) - 1, n - 1)
        assert r == 0
        rhs.append(q)
    return M, rhs


def build_C_row_binomial(m: int) -> tuple[int, ...]:
    """Row c_{m,2..m} by solving the binomial linear system exactly."""
    M, rhs = binomial_system(m)
    return tuple(as_integer(x, f"c_{m},{k}") for k, x in enumerate(M.solve(rhs), start=2))


def build_C_binomial(max_m: int, jobs: int = 1) -> CoeffTable:
    """Whole c table, one independent binomial system per row."""
    if max_m < 2:
        raise ValueError(f"max_m must be >= 2, got {max_m}")
    ms = range(2, max_m + 1)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            rows = tuple(pool.map(build_C_row_binomial, ms))
    else:
        rows = tuple(build_C_row_binomial(m) for m in ms)
    return CoeffTable(max_m, rows, "binomial-system")


def build_C(max_m: int, route: str = "recurrence", jobs: int = 1) -> CoeffTable:
    if route == "recurrence":
        return build_C_recurrence(max_m)
    if route == "invert-A":
        return build_C_invert_A(max_m)
    if route == "binomial-system":
        return build_C_binomial(max_m, jobs=jobs)
    raise ValueError(f"unknown route {route!r}; choose from {ROUTES}")


def t_moment(m: int, alpha: int, table: CoeffTable) -> int:
    """T_m^alpha = sum_{k=2}^m c_mk k^alpha."""
    if not 2 <= m <= table.max_m:
        raise ValueError(f"m must lie in 2..{table.max_m}, got {m}")
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    return sum(c * k**alpha for k, c in enumerate(table.row(m), start=2))
