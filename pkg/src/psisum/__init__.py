"""Exact psi-basis expansion of iterated power sums S_m^(a)(n)."""
from .coeffs import (
    ATable,
    CoeffTable,
    RationalMatrix,
    a_coeff,
    build_A,
    build_C,
    build_C_binomial,
    build_C_invert_A,
    build_C_recurrence,
    build_C_row_binomial,
    t_moment,
)
from .conjecture import ConjecturePolynomial, check_conjecture, fact4_fixtures, fit_pattern
from .exact import binomial_B, binomial_C, harmonic, rising_factorial, stirling1, stirling2
from .hypersum import (
    Evaluator,
    hypersum_factored,
    hypersum_oracle,
    hypersum_psi,
    hypersum_psi_recurrence,
    hypersum_stirling2,
    verify_identities,
)
from .psi import psi, psi_closed, psi_recursive_oracle

__version__ = "0.1.0"
