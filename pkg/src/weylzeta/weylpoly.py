"""Dimension-growth polynomials along lines of weights.

For weights mu, nu the polynomial interpolates the Weyl dimension formula
along n |-> n*mu + nu: each positive coroot contributes a linear factor
(a*x + b)/height with a, b its values on mu and nu + rho.  For suitable
per-family (mu, nu) the order/degree ratio at 0 realizes the efficiency of
the dual system, which is what makes these polynomials useful probes of the
degree spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .rootsys import FamilyRank, RootSystem, build

Weight = tuple[int, ...]


@dataclass(frozen=True)
class WeylPolynomial:
    """Exact rational coefficients, ascending degree."""

    coefficients: tuple[Fraction, ...]
    provenance: Optional[tuple[FamilyRank, Weight, Weight]] = None

    def __str__(self):
        return "[" + ", ".join(str(c) for c in self.coefficients) + "]"


@dataclass(frozen=True)
class ExplicitPair:
    """The per-family (mu, nu) whose polynomial realizes the efficiency."""

    id: FamilyRank
    mu: Weight
    nu: Weight


def weyl_polynomial(R: RootSystem, mu, nu) -> WeylPolynomial:
    shifted = tuple(v + 1 for v in nu)
    coeffs = [Fraction(1)]
    denom = 1
    for i in range(R.num_positive):
        a = R.pair(i, mu)
        b = R.pair(i, shifted)
        new = [Fraction(0)] * (len(coeffs) + 1)
        for k, c in enumerate(coeffs):
            if b:
                new[k] += c * b
            if a:
                new[k + 1] += c * a
        coeffs = new
        denom *= R.coroot_height(i)
    while len(coeffs) > 1 and not coeffs[-1]:
        coeffs.pop()
    return WeylPolynomial(
        tuple(c / denom for c in coeffs), (R.id, tuple(mu), tuple(nu))
    )


def evaluate(P: WeylPolynomial, n) -> Fraction:
    acc = Fraction(0)
    for c in reversed(P.coefficients):
        acc = acc * n + c
    return acc


def degree(P: WeylPolynomial) -> int:
    if not any(P.coefficients):
        raise ValueError("zero polynomial has no degree")
    return max(k for k, c in enumerate(P.coefficients) if c)


def ord_at_zero(P: WeylPolynomial) -> int:
    if not any(P.coefficients):
        raise ValueError("zero polynomial has no order")
    return next(k for k, c in enumerate(P.coefficients) if c)


def check_conditions(R: RootSystem, mu, nu) -> bool:
    """Positivity of mu on all coroots, and of nu wherever mu vanishes."""
    for i in range(R.num_positive):
        a = R.pair(i, mu)
        if a < 0:
            return False
        if a == 0 and R.pair(i, nu) < 0:
            return False
    return True


def proportionality(P1: WeylPolynomial, P2: WeylPolynomial) -> Optional[Fraction]:
    """The constant c with P2 = c * P1, if one exists."""
    k = next((i for i, c in enumerate(P1.coefficients) if c), None)
    if k is None:
        return None
    if k >= len(P2.coefficients) or not P2.coefficients[k]:
        return None
    c = P2.coefficients[k] / P1.coefficients[k]
    n = max(len(P1.coefficients), len(P2.coefficients))

    def coeff(P, i):
        return P.coefficients[i] if i < len(P.coefficients) else Fraction(0)

    if all(coeff(P2, i) == c * coeff(P1, i) for i in range(n)):
        return c
    return None


_EXCEPTIONAL_PAIRS: dict[tuple[str, int], tuple[Weight, Weight]] = {
    ("E", 6): ((0, 1, 1, 0, 1, 1), (0, -1, -2, 0, -2, -1)),
    ("E", 7): ((1, 0, 1, 1, 0, 1, 0), (-1, 0, -1, -2, 0, -2, 0)),
    ("E", 8): ((1, 0, 0, 1, 0, 1, 1, 1), (-2, 0, 0, -2, 0, -2, -1, -1)),
    ("F", 4): ((1, 1, 0, 0), (-1, -2, 0, 0)),
    ("G", 2): ((1, 0), (-2, 0)),
}

# the ruled-out complement types: (orbit index of nu+rho, type of its complement)
_PAIR_COMPLEMENTS = {
    "A": (1, lambda n: [FamilyRank("A", n - 1)] if n > 1 else []),
    "B": (1, lambda n: [FamilyRank("B", n - 1)] if n > 2 else [FamilyRank("A", 1)]),
    "C": (1, lambda n: [FamilyRank("C", n - 1)] if n > 3 else [FamilyRank("B", 2)]),
    "D": (1, lambda n: [FamilyRank("D", n - 1)] if n > 4 else [FamilyRank("A", 3)]),
}

_EXCEPTIONAL_COMPLEMENTS = {
    ("E", 6): (1, ["D5"]),
    ("E", 7): (7, ["E6"]),
    ("E", 8): (8, ["E7"]),
    ("F", 4): (4, ["B3"]),
    ("G", 2): (1, ["A1"]),
}


def explicit_pair(fr: FamilyRank) -> ExplicitPair:
    fam, n = fr.family, fr.rank
    if fam in ("A", "B"):
        mu: Weight = tuple(0 if i == 0 else 1 for i in range(n))
    elif fam == "C":
        mu = (1,) * (n - 2) + (2, 0)
    elif fam == "D":
        mu = (1,) * (n - 3) + (2, 0, 0)
    else:
        mu, nu = _EXCEPTIONAL_PAIRS[fam, n]
        return ExplicitPair(fr, mu, nu)
    return ExplicitPair(fr, mu, tuple(-c for c in mu))


def pair_complement_claim(fr: FamilyRank) -> tuple[int, list[FamilyRank]]:
    """For the explicit pair: the fundamental-weight orbit index of nu+rho
    and the component types of its orthogonal complement."""
    fam, n = fr.family, fr.rank
    if fam in ("A", "B", "C", "D"):
        k, fn = _PAIR_COMPLEMENTS[fam]
        return k, fn(n)
    k, names = _EXCEPTIONAL_COMPLEMENTS[fam, n]
    return k, [FamilyRank.parse(t) for t in names]


def explicit_polynomial(fr: FamilyRank) -> WeylPolynomial:
    p = explicit_pair(fr)
    return weyl_polynomial(build(fr), p.mu, p.nu)
