"""Degree spectra of compact semisimple groups.

A group is a product of irreducible factors together with a weight lattice
between the root lattice and the full weight lattice of the product.  All
dimension arithmetic is exact big-integer work; spectra are tables counting
irreducible representations by dimension up to a bound.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .rootsys import FamilyRank, RootSystem, build

Weight = tuple[int, ...]


@dataclass(frozen=True)
class GroupSpec:
    """Product of irreducible factors plus a choice of weight lattice.

    kind 'sc' takes the full weight lattice, 'adjoint' the root lattice, and
    'cosets' an explicit subgroup of the fundamental group given by vectors
    of fractional root-basis coordinates.
    """

    factors: tuple[FamilyRank, ...]
    kind: str = "sc"
    cosets: tuple[tuple[Fraction, ...], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("group needs at least one factor")
        if self.kind not in ("sc", "adjoint", "cosets"):
            raise ValueError(f"unknown lattice kind {self.kind!r}")
        if self.kind != "cosets":
            if self.cosets:
                raise ValueError("coset list requires kind='cosets'")
            return
        n = self.total_rank
        seen = set()
        for v in self.cosets:
            if len(v) != n:
                raise ValueError("coset vector length != total rank")
            seen.add(tuple(Fraction(x) % 1 for x in v))
        if (Fraction(0),) * n not in seen:
            raise ValueError("cosets must contain the identity coset")
        for v in seen:
            if not self._is_weight_coset(v):
                raise ValueError(f"not a weight-lattice coset: {v}")
        for a in seen:
            for b in seen:
                if tuple((x + y) % 1 for x, y in zip(a, b)) not in seen:
                    raise ValueError("cosets are not closed under addition")
        object.__setattr__(self, "cosets", tuple(sorted(seen)))

    def _is_weight_coset(self, v) -> bool:
        # fractional root-basis coordinates name a weight iff C^T v is integral
        for fr, (a, b) in zip(self.factors, self.slices()):
            cartan = build(fr).cartan_matrix
            n = fr.rank
            block = v[a:b]
            for i in range(n):
                if sum(block[j] * cartan[j][i] for j in range(n)).denominator != 1:
                    return False
        return True

    @property
    def total_rank(self) -> int:
        return sum(fr.rank for fr in self.factors)

    def slices(self) -> list[tuple[int, int]]:
        out, off = [], 0
        for fr in self.factors:
            out.append((off, off + fr.rank))
            off += fr.rank
        return out

    def canonical(self) -> str:
        base = "x".join(str(fr) for fr in self.factors)
        if self.kind == "cosets":
            body = ";".join(",".join(str(x) for x in v) for v in self.cosets)
            return f"{base}:cosets[{body}]"
        return f"{base}:{self.kind}"

    _GRAMMAR = re.compile(
        r"^(?P<factors>[A-G]\d+(?:x[A-G]\d+)*)"
        r"(?::(?P<kind>sc|adjoint|cosets\[(?P<body>[^\]]*)\]))?$"
    )

    @classmethod
    def parse(cls, text: str) -> "GroupSpec":
        m = cls._GRAMMAR.match(text.strip())
        if not m:
            raise ValueError(f"cannot parse group {text!r}")
        factors = tuple(FamilyRank.parse(t) for t in m.group("factors").split("x"))
        kind = m.group("kind") or "sc"
        if kind.startswith("cosets"):
            body = m.group("body")
            vecs = tuple(
                tuple(Fraction(c) for c in vec.split(",")) for vec in body.split(";")
            )
            return cls(factors, "cosets", vecs)
        return cls(factors, kind)

    def __str__(self):
        return self.canonical()


# -- dimension formula -----------------------------------------------------


@lru_cache(maxsize=None)
def _delta(fr: FamilyRank) -> int:
    system = build(fr)
    return math.prod(system.coroot_height(i) for i in range(system.num_positive))


def dim_irrep(R: RootSystem, lam) -> int:
    """Dimension of the irreducible representation with highest weight lam."""
    if len(lam) != R.rank or any(c < 0 for c in lam):
        raise ValueError(f"weight {lam} is not dominant")
    shifted = tuple(c + 1 for c in lam)
    num = 1
    for coroot in R.coroots:
        num *= sum(c * w for c, w in zip(coroot, shifted) if c)
    q, r = divmod(num, _delta(R.id))
    assert r == 0
    return q


def dim_irrep_product(spec: GroupSpec, lam) -> int:
    if len(lam) != spec.total_rank:
        raise ValueError("weight length does not match total rank")
    out = 1
    for fr, (a, b) in zip(spec.factors, spec.slices()):
        out *= dim_irrep(build(fr), tuple(lam[a:b]))
    return out


def in_lattice(spec: GroupSpec, lam) -> bool:
    """True iff lam lies in the group's weight lattice."""
    if spec.kind == "sc":
        return True
    frac = []
    for fr, (a, b) in zip(spec.factors, spec.slices()):
        frac.extend(x % 1 for x in build(fr).root_basis_coords(lam[a:b]))
    if spec.kind == "adjoint":
        return not any(frac)
    return tuple(frac) in spec.cosets


# -- enumeration -----------------------------------------------------------


def _factor_spectrum(fr: FamilyRank, bound: int) -> list[tuple[int, Weight]]:
    """Dominant weights of one factor with dimension <= bound, sorted."""
    system = build(fr)
    n = system.rank
    coroots = system.coroots
    delta = _delta(fr)
    shifted = [1] * n  # lam + rho, suffix held at rho during the search

    def dim_now() -> int:
        num = 1
        for c in coroots:
            num *= sum(ci * wi for ci, wi in zip(c, shifted) if ci)
        return num // delta

    out: list[tuple[int, Weight]] = []

    def rec(i: int):
        if i == n:
            out.append((dim_now(), tuple(x - 1 for x in shifted)))
            return
        # dim is strictly increasing in each coordinate, and the value with
        # the suffix at zero is a lower bound for every extension
        while dim_now() <= bound:
            rec(i + 1)
            shifted[i] += 1
        shifted[i] = 1

    rec(0)
    out.sort()
    return out


def enumerate_dominant(spec: GroupSpec, D: int) -> list[tuple[Weight, int]]:
    """All dominant weights of the group with dimension at most D.

    Returns (weight, dimension) pairs sorted by dimension then weight.
    """
    if D < 1:
        return []
    lists = [_factor_spectrum(fr, D) for fr in spec.factors]
    m = len(lists)
    parts: list[Weight] = [()] * m
    results: list[tuple[Weight, int]] = []

    def rec(k: int, budget: int, dim_so_far: int):
        if k == m:
            lam = tuple(c for part in parts for c in part)
            if in_lattice(spec, lam):
                results.append((lam, dim_so_far))
            return
        for d, w in lists[k]:
            if d > budget:
                break
            parts[k] = w
            rec(k + 1, budget // d, dim_so_far * d)

    rec(0, D, 1)
    results.sort(key=lambda t: (t[1], t[0]))
    return results


# -- allowability ----------------------------------------------------------


def N_of(spec: GroupSpec) -> int:
    """Factorial of the total number of roots of the product."""
    return math.factorial(sum(2 * build(fr).num_positive for fr in spec.factors))


def allowable_at(R: RootSystem, lam, p: int) -> bool:
    """False iff every coordinate of lam + rho is divisible by p."""
    return not all((c + 1) % p == 0 for c in lam)


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out.append(n)
    return out


def allowable(spec: GroupSpec, lam) -> bool:
    """True iff no factor of lam can be stripped at a prime = 1 mod N.

    Only primes dividing the coordinate gcd of a factor's shifted weight can
    fail the divisibility test, so the check is finite.
    """
    N = N_of(spec)
    for a, b in spec.slices():
        g = math.gcd(*(c + 1 for c in lam[a:b]))
        for p in _prime_divisors(g):
            if p % N == 1:
                return False
    return True


# -- spectra ---------------------------------------------------------------


@dataclass
class DegreeTable:
    """Counts of irreducible representations by dimension up to a bound."""

    group: str
    variant: str  # "zeta" or "zeta_star"
    bound: int
    counts: dict[int, int]

    _HEADER = re.compile(
        r"^#\s*weylzeta v1 group=(\S+) variant=(zeta|zeta_star) maxdim=(\d+)\s*$"
    )

    def to_text(self) -> str:
        lines = [f"# weylzeta v1 group={self.group} variant={self.variant} maxdim={self.bound}"]
        for d in sorted(self.counts):
            if self.counts[d]:
                lines.append(f"{d}\t{self.counts[d]}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "DegreeTable":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if not lines:
            raise ValueError("empty degree table")
        m = cls._HEADER.match(lines[0])
        if not m:
            raise ValueError(f"bad degree-table header: {lines[0]!r}")
        counts = {}
        for ln in lines[1:]:
            d, c = ln.split("\t")
            counts[int(d)] = int(c)
        return cls(m.group(1), m.group(2), int(m.group(3)), counts)

    def truncated(self, bound: int) -> "DegreeTable":
        if bound > self.bound:
            raise ValueError("cannot extend a table by truncation")
        return DegreeTable(
            self.group, self.variant, bound,
            {d: c for d, c in self.counts.items() if d <= bound},
        )


def zeta_coefficients(spec: GroupSpec, D: int) -> DegreeTable:
    counts: dict[int, int] = {}
    for _, d in enumerate_dominant(spec, D):
        counts[d] = counts.get(d, 0) + 1
    return DegreeTable(spec.canonical(), "zeta", D, counts)


def zeta_star_coefficients(spec: GroupSpec, D: int) -> DegreeTable:
    counts: dict[int, int] = {}
    for lam, d in enumerate_dominant(spec, D):
        if allowable(spec, lam):
            counts[d] = counts.get(d, 0) + 1
    return DegreeTable(spec.canonical(), "zeta_star", D, counts)


def _primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return [p for p in range(2, n + 1) if sieve[p]]


def euler_identity_check(spec: GroupSpec, D: int) -> bool:
    """Coefficientwise check that zeta equals zeta_star times the geometric
    correction factors at primes = 1 mod N, truncated at D."""
    expect = [0] * (D + 1)
    for d, c in zeta_coefficients(spec, D).counts.items():
        expect[d] = c
    arr = [0] * (D + 1)
    for d, c in zeta_star_coefficients(spec, D).counts.items():
        arr[d] = c
    N = N_of(spec)
    primes = [p for p in _primes_upto(D) if p % N == 1]
    for fr in spec.factors:
        m = build(fr).num_positive
        for p in primes:
            q = p**m
            if q > D:
                continue
            for d in range(q, D + 1, q):
                arr[d] += arr[d // q]
    return arr == expect


def _is_prime_power(n: int) -> bool:
    return n > 1 and len(_prime_divisors(n)) == 1


def prime_power_scan(spec: GroupSpec, D: int) -> list[tuple[int, int]]:
    """Entries of the degree spectrum whose dimension is a prime power > 1."""
    table = zeta_coefficients(spec, D)
    return [(d, table.counts[d]) for d in sorted(table.counts) if _is_prime_power(d)]


def recover_factor_sizes(coeffs) -> list[int]:
    """Invert a truncated product of geometric series 1/(1-t^m).

    coeffs maps exponent k to coefficient (a dict, or a dense list starting
    at k=0).  Returns the sorted factor sizes m, erroring if no multiset of
    factors reproduces the series.
    """
    if isinstance(coeffs, dict):
        K = max(coeffs)
        target = [coeffs.get(k, 0) for k in range(K + 1)]
    else:
        target = list(coeffs)
        K = len(target) - 1
    if K < 0 or target[0] != 1:
        raise ValueError("series must start with coefficient 1")
    current = [1] + [0] * K
    sizes: list[int] = []
    while current != target:
        k = next(i for i in range(1, K + 1) if current[i] != target[i])
        if current[k] > target[k]:
            raise ValueError("series is not a product of geometric factors")
        sizes.append(k)
        for j in range(k, K + 1):
            current[j] += current[j - k]
    return sorted(sizes)
