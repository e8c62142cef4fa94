"""Regression ledger of reference values.

Every check here re-derives a frozen set of numbers or relations from
scratch and raises AssertionError when anything drifts.  run_checks
returns one result per check; the command line prints them as a
PASS/FAIL ledger and the acceptance tests run them one per test.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .efficiency import eff_bruteforce, eff_formula
from .gassmann import DEFAULT_TRACE, DEFAULT_TWIST, verify_gassmann
from .repdegrees import (
    GroupSpec,
    dim_irrep,
    enumerate_dominant,
    euler_identity_check,
    prime_power_scan,
    zeta_star_coefficients,
)
from .rootsys import (
    FamilyRank,
    all_types,
    build,
    classify_subsystem,
    quadratic_nullspace_dim,
    spanning_check,
)
from .weylpoly import evaluate, explicit_pair, explicit_polynomial


def check_explicit_values() -> None:
    """Frozen values of the distinguished polynomials at small arguments."""
    poly = lambda name: explicit_polynomial(FamilyRank.parse(name))
    for family, ranks in (("A", range(1, 9)), ("B", range(2, 9)),
                          ("C", range(3, 9)), ("D", range(4, 9))):
        for n in ranks:
            assert evaluate(poly(f"{family}{n}"), 1) == 1, f"{family}{n} at 1"
    assert evaluate(poly("G2"), 2) == 1

    f4 = poly("F4")
    v2, v3 = int(evaluate(f4, 2)), int(evaluate(f4, 3))
    assert (v2, v3) == (52, 340119)
    # 340119 = 3^4 * 13 * 17 * 19 and 52 = 2^2 * 13: the true gcd is 13
    assert math.gcd(v2, v3) == 13

    e6 = poly("E6")
    vals = tuple(int(evaluate(e6, n)) for n in (2, 3, 4))
    assert vals == (1728, 3171108447, 71292900343808)
    assert math.gcd(*vals) == 1

    e7 = poly("E7")
    vals = tuple(int(evaluate(e7, n)) for n in (2, 3))
    assert vals == (573440, 33940969546604175)
    assert math.gcd(*vals) == 5

    e8 = poly("E8")
    vals = tuple(int(evaluate(e8, n)) for n in (2, 3))
    assert vals == (4096000, 2665014302693985712862760000)
    assert math.gcd(*vals) == 8000


_CONSISTENCY_TYPES = (
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4",
    "D4", "D5", "E6", "E7", "E8", "F4", "G2",
)


def check_polynomial_consistency() -> None:
    """The distinguished polynomial interpolates the dimension formula."""
    for name in _CONSISTENCY_TYPES:
        system = build(name)
        pair = explicit_pair(system.id)
        P = explicit_polynomial(system.id)
        for n in range(2, 6):
            lam = tuple(n * m + v for m, v in zip(pair.mu, pair.nu))
            if any(c < 0 for c in lam):
                continue
            assert evaluate(P, n) == dim_irrep(system, lam), f"{name} at {n}"


def check_minimal_divisible_dimensions() -> None:
    """Exhaustive minimality of two distinguished divisible dimensions."""
    dims = [d for _, d in enumerate_dominant(GroupSpec.parse("E7:sc"), 573440)]
    hits = sorted(d for d in dims if d % 114688 == 0)
    assert hits and hits[0] == 573440, f"E7 multiples of 114688: {hits[:3]}"

    dims = [d for _, d in enumerate_dominant(GroupSpec.parse("E8:sc"), 4096000)]
    hits = sorted(d for d in dims if d % 512 == 0)
    assert hits and hits[0] == 4096000, f"E8 multiples of 512: {hits[:3]}"


_BRUTE_WITNESS = {
    "A2": [["A1"]],
    "A3": [["A2"]],
    "A4": [["A3"]],
    "B2": [["A1"]],
    "B3": [["B2"]],
    "B4": [["B3"]],
    "C3": [["B2"]],
    "C4": [["C3"]],
    "D4": [["A3"]],
    "G2": [["A1"]],
    "F4": [["B3"], ["C3"]],
}


def check_efficiency_oracle(include_f4: bool = True) -> None:
    """Brute-force efficiency equals the closed forms, witnesses included."""
    for name, expected_types in sorted(_BRUTE_WITNESS.items()):
        if name == "F4" and not include_f4:
            continue
        res = eff_bruteforce(name)
        expected = eff_formula(name)
        assert res.eff == expected.eff, f"{name} eff {res.eff}"
        assert res.lev == expected.lev, f"{name} lev {res.lev}"
        types = [str(t) for t in classify_subsystem(res.witness[0])]
        assert types in expected_types, f"{name} witness {types}"


def check_prime_power_scan() -> None:
    """No prime-power degrees below a million for the rank-7 adjoint pair."""
    for name in ("B7", "C7"):
        spec = GroupSpec.parse(f"{name}:adjoint")
        hits = prime_power_scan(spec, 10**6)
        assert hits == [], f"{name}: {hits[:5]}"


def check_scaling_identity() -> None:
    """dim(p*lam + (p-1)*rho) = p^|R+| dim(lam) on all rank <= 4 systems."""
    for fr in all_types(4):
        system = build(fr)
        n = system.rank
        factor = {p: p**system.num_positive for p in (2, 3, 5, 7)}
        for lam in product(range(3), repeat=n):
            base = dim_irrep(system, lam)
            for p in (2, 3, 5, 7):
                scaled = tuple(p * c + p - 1 for c in lam)
                assert dim_irrep(system, scaled) == factor[p] * base, (fr, lam, p)


def check_euler_identity() -> None:
    """Restricted counts generate the full counts through allowable primes."""
    for text in ("A1:sc", "A1:adjoint", "A1xA1:sc", "A1xA1:cosets[0,0;1/2,1/2]"):
        assert euler_identity_check(GroupSpec.parse(text), 512), text
    star = zeta_star_coefficients(GroupSpec.parse("A1:sc"), 4096)
    assert sorted(star.counts) == [2**k for k in range(13)]
    assert set(star.counts.values()) == {1}


def check_gassmann_pair() -> None:
    """The default twisted pair: equal spectra, inequivalent subgroups."""
    report = verify_gassmann(DEFAULT_TRACE, DEFAULT_TWIST, 10**4)
    assert report.n == 128
    assert report.zeta_equal
    assert not report.perm_equivalent


def check_quadratic_rigidity() -> None:
    """Roots pin the invariant quadratic form and span off every hyperplane."""
    for fr in all_types(8):
        system = build(fr)
        assert quadratic_nullspace_dim(system) == 0, str(fr)
        assert spanning_check(system), str(fr)


def check_prime_order_limit() -> None:
    """log(p)-weighted vanishing order approaches the efficiency."""
    for name in ("A3", "B3", "G2", "F4"):
        system = build(name)
        pair = explicit_pair(system.id)
        eff = float(eff_formula(name).eff)
        errors = []
        for p in (101, 499):
            lam = tuple(p * m + v for m, v in zip(pair.mu, pair.nu))
            dim = dim_irrep(system, lam)
            d, order = dim, 0
            while d % p == 0:
                d //= p
                order += 1
            errors.append(abs(math.log(p) * order / math.log(dim) - eff))
        assert errors[1] < errors[0], f"{name}: {errors}"
        assert errors[1] < 0.05, f"{name}: {errors[1]:.4f}"


@dataclass(frozen=True)
class CheckResult:
    title: str
    passed: bool
    detail: str = ""


def run_checks(fast: bool = False) -> list[CheckResult]:
    """Run the ledger; fast mode drops the two slowest searches."""
    checks = [
        ("explicit pair values and gcds", check_explicit_values),
        ("polynomials match the dimension formula", check_polynomial_consistency),
        ("smallest divisible dimensions", check_minimal_divisible_dimensions),
        ("efficiency search agrees with the closed forms",
         lambda: check_efficiency_oracle(include_f4=not fast)),
    ]
    if not fast:
        checks.append(("rank-7 adjoint prime-power scan", check_prime_power_scan))
    checks += [
        ("dimension scaling identity", check_scaling_identity),
        ("restricted counts generate the spectrum", check_euler_identity),
        ("equal-spectrum quotient pair", check_gassmann_pair),
        ("quadratic rigidity of root systems", check_quadratic_rigidity),
        ("prime orders approximate the efficiency", check_prime_order_limit),
    ]
    results = []
    for title, fn in checks:
        try:
            fn()
        except Exception as exc:  # a crash is a failure, not an abort
            results.append(CheckResult(title, False, f"{type(exc).__name__}: {exc}"))
        else:
            results.append(CheckResult(title, True))
    return results
