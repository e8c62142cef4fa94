"""One test per reference-value check, in ledger order.

Each test delegates to the corresponding check in weylzeta.verify, so
`pytest -v tests/test_acceptance.py` prints one pass/fail line per
check and `weylzeta verify-paper` replays the same ledger from the
command line.
"""

from weylzeta import verify


def test_explicit_pair_value_table():
    verify.check_explicit_values()


def test_polynomials_match_dimension_formula():
    verify.check_polynomial_consistency()


def test_smallest_divisible_dimensions():
    verify.check_minimal_divisible_dimensions()


def test_efficiency_bruteforce_agrees_with_formula():
    verify.check_efficiency_oracle()


def test_rank7_adjoint_prime_power_scan_empty():
    verify.check_prime_power_scan()


def test_dimension_scaling_identity():
    verify.check_scaling_identity()


def test_restricted_counts_generate_spectrum():
    verify.check_euler_identity()


def test_equal_spectrum_quotient_pair():
    verify.check_gassmann_pair()


def test_quadratic_rigidity_all_types():
    verify.check_quadratic_rigidity()


def test_prime_orders_approach_efficiency():
    verify.check_prime_order_limit()
