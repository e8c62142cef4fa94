"""Irreducible root systems in exact Bourbaki coordinates.

Roots live in the ambient space of the standard model (dimension n+1 for A_n,
n for B_n/C_n/D_n, 8 for the E series, 4 for F4, 3 for G2) as tuples of
Fractions.  Weights are tuples of integers in the fundamental-weight basis,
where rho is the all-ones vector.  Positive roots are generated from the
simple roots by the root-string algorithm, never copied from tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from ._linalg import SpanBasis, nullspace, rank, solve

Vector = tuple[Fraction, ...]
Weight = tuple[int, ...]


@dataclass(frozen=True, order=True)
class FamilyRank:
    """Type label of an irreducible root system, e.g. FamilyRank('B', 7)."""

    family: str
    rank: int

    def __post_init__(self):
        fam, n = self.family, self.rank
        ok = (
            (fam == "A" and n >= 1)
            or (fam == "B" and n >= 2)
            or (fam == "C" and n >= 3)
            or (fam == "D" and n >= 4)
            or (fam == "E" and n in (6, 7, 8))
            or (fam == "F" and n == 4)
            or (fam == "G" and n == 2)
        )
        if not ok:
            raise ValueError(f"invalid root system type: {fam}{n}")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @classmethod
    def parse(cls, text: str) -> "FamilyRank":
        text = text.strip()
        if len(text) < 2 or text[0] not in "ABCDEFG" or not text[1:].isdigit():
            raise ValueError(f"cannot parse root system type {text!r}")
        return cls(text[0], int(text[1:]))


def all_types(max_rank: int = 8) -> list[FamilyRank]:
    """Every valid irreducible type with rank at most max_rank."""
    out = []
    for fam, lo in (("A", 1), ("B", 2), ("C", 3), ("D", 4)):
        out.extend(FamilyRank(fam, n) for n in range(lo, max_rank + 1))
    out.extend(FamilyRank("E", n) for n in (6, 7, 8) if n <= max_rank)
    if max_rank >= 4:
        out.append(FamilyRank("F", 4))
    if max_rank >= 2:
        out.append(FamilyRank("G", 2))
    return out


def _e(i: int, dim: int) -> Vector:
    return tuple(Fraction(1 if j == i else 0) for j in range(dim))


def _vadd(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def _vsub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def _dot(a: Vector, b: Vector) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _simple_roots(fr: FamilyRank) -> list[Vector]:
    fam, n = fr.family, fr.rank
    if fam == "A":
        dim = n + 1
        return [_vsub(_e(i, dim), _e(i + 1, dim)) for i in range(n)]
    if fam == "B":
        return [_vsub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)] + [_e(n - 1, n)]
    if fam == "C":
        last = tuple(2 * x for x in _e(n - 1, n))
        return [_vsub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)] + [last]
    if fam == "D":
        return [_vsub(_e(i, n), _e(i + 1, n)) for i in range(n - 1)] + [
            _vadd(_e(n - 2, n), _e(n - 1, n))
        ]
    if fam == "E":
        half = Fraction(1, 2)
        alpha1 = tuple(
            half if i in (0, 7) else -half for i in range(8)
        )
        simples = [
            alpha1,
            _vadd(_e(0, 8), _e(1, 8)),
            _vsub(_e(1, 8), _e(0, 8)),
            _vsub(_e(2, 8), _e(1, 8)),
            _vsub(_e(3, 8), _e(2, 8)),
            _vsub(_e(4, 8), _e(3, 8)),
            _vsub(_e(5, 8), _e(4, 8)),
            _vsub(_e(6, 8), _e(5, 8)),
        ]
        return simples[:n]
    if fam == "F":
        half = Fraction(1, 2)
        return [
            _vsub(_e(1, 4), _e(2, 4)),
            _vsub(_e(2, 4), _e(3, 4)),
            _e(3, 4),
            (half, -half, -half, -half),
        ]
    # G2 in the sum-zero hyperplane of Q^3: alpha1 short, alpha2 long
    return [
        (Fraction(1), Fraction(-1), Fraction(0)),
        (Fraction(-2), Fraction(1), Fraction(1)),
    ]


def _generate_positive_roots(simples: list[Vector]) -> list[tuple[Vector, tuple[int, ...]]]:
    """All positive roots with their simple-root coordinates, by height."""
    n = len(simples)
    norms = [_dot(s, s) for s in simples]
    known: dict[Vector, tuple[int, ...]] = {}
    level = []
    for i, s in enumerate(simples):
        coords = tuple(1 if j == i else 0 for j in range(n))
        known[s] = coords
        level.append((s, coords))
    out = list(level)
    while level:
        nxt: dict[Vector, tuple[int, ...]] = {}
        for beta, coords in level:
            for i, alpha in enumerate(simples):
                # p = largest k with beta - k*alpha still a root (all known already)
                p = 0
                v = _vsub(beta, alpha)
                while v in known:
                    p += 1
                    v = _vsub(v, alpha)
                pairing = 2 * _dot(beta, alpha) / norms[i]
                if p - pairing >= 1:
                    new = _vadd(beta, alpha)
                    if new not in known and new not in nxt:
                        nc = tuple(
                            c + (1 if j == i else 0) for j, c in enumerate(coords)
                        )
                        nxt[new] = nc
        known.update(nxt)
        level = sorted(nxt.items())
        out.extend(level)
    return out


class RootSystem:
    """An irreducible root system, immutable after build()."""

    def __init__(self, fr: FamilyRank):
        self.id = fr
        simples = _simple_roots(fr)
        self.simple_roots: tuple[Vector, ...] = tuple(simples)
        self.ambient_dim = len(simples[0])
        n = fr.rank

        generated = _generate_positive_roots(simples)
        # canonical order: height, then simple-root coordinates
        generated.sort(key=lambda rc: (sum(rc[1]), rc[1]))
        self.positive_roots: tuple[Vector, ...] = tuple(v for v, _ in generated)
        self.root_coords: tuple[tuple[int, ...], ...] = tuple(c for _, c in generated)
        self._pos_index = {v: i for i, v in enumerate(self.positive_roots)}
        self._norms = tuple(_dot(v, v) for v in self.positive_roots)

        # cartan[i][j] = 2(alpha_i, alpha_j) / (alpha_j, alpha_j)
        snorms = [_dot(s, s) for s in simples]
        self.cartan_matrix: tuple[tuple[int, ...], ...] = tuple(
            tuple(int(2 * _dot(a, b) / snorms[j]) for j, b in enumerate(simples))
            for a in simples
        )

        # coroot of each positive root in the basis of simple coroots
        simple_coroots = [
            tuple(2 * x / snorms[i] for x in s) for i, s in enumerate(simples)
        ]
        cols = [
            [simple_coroots[j][r] for j in range(n)] for r in range(self.ambient_dim)
        ]
        coroots = []
        for v, nrm in zip(self.positive_roots, self._norms):
            target = [2 * x / nrm for x in v]
            sol = solve(cols, target)
            assert sol is not None and all(c.denominator == 1 and c >= 0 for c in sol)
            coroots.append(tuple(int(c) for c in sol))
        self.coroots: tuple[tuple[int, ...], ...] = tuple(coroots)

        # fundamental weights inside span(R): solve C^T y = e_i in simple-root basis
        ct_rows = [
            [Fraction(self.cartan_matrix[k][j]) for k in range(n)] for j in range(n)
        ]
        fw = []
        for i in range(n):
            y = solve(ct_rows, [Fraction(1 if j == i else 0) for j in range(n)])
            vec = tuple(
                sum((y[k] * simples[k][r] for k in range(n)), Fraction(0))
                for r in range(self.ambient_dim)
            )
            fw.append(vec)
        self.fundamental_weights: tuple[Vector, ...] = tuple(fw)
        self.rho: Weight = (1,) * n

        inv_ct = [
            solve(ct_rows, [Fraction(1 if j == i else 0) for j in range(n)])
            for i in range(n)
        ]
        # x = inv_ct @ lambda gives simple-root coordinates of a weight
        self._inv_cartan_t = tuple(
            tuple(inv_ct[j][i] for j in range(n)) for i in range(n)
        )

    # -- basic accessors ---------------------------------------------------

    @property
    def rank(self) -> int:
        return self.id.rank

    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def num_roots(self) -> int:
        return 2 * len(self.positive_roots)

    def pair(self, alpha_index: int, lam) -> int:
        """Coroot-weight pairing alpha^vee(lambda) for a positive root index."""
        return sum(c * w for c, w in zip(self.coroots[alpha_index], lam))

    def coroot_height(self, alpha_index: int) -> int:
        return sum(self.coroots[alpha_index])

    def root_fundamental(self, alpha_index: int) -> Weight:
        """A positive root written in the fundamental-weight basis."""
        x = self.root_coords[alpha_index]
        n = self.rank
        return tuple(
            sum(self.cartan_matrix[j][i] * x[j] for j in range(n)) for i in range(n)
        )

    def weight_to_ambient(self, lam) -> Vector:
        vec = [Fraction(0)] * self.ambient_dim
        for c, w in zip(lam, self.fundamental_weights):
            if c:
                for r in range(self.ambient_dim):
                    vec[r] += c * w[r]
        return tuple(vec)

    def root_basis_coords(self, lam) -> tuple[Fraction, ...]:
        """Coordinates of a weight in the simple-root basis."""
        return tuple(
            sum((row[j] * Fraction(lam[j]) for j in range(self.rank)), Fraction(0))
            for row in self._inv_cartan_t
        )

    def is_root(self, vec: Vector) -> bool:
        return vec in self._pos_index or tuple(-x for x in vec) in self._pos_index

    def __repr__(self):
        return f"RootSystem({self.id})"


@lru_cache(maxsize=None)
def _build(fr: FamilyRank) -> RootSystem:
    return RootSystem(fr)


def build(fr) -> RootSystem:
    """Build (and cache) the root system for a FamilyRank or a string like 'F4'."""
    if isinstance(fr, str):
        fr = FamilyRank.parse(fr)
    return _build(fr)


def pair(system: RootSystem, alpha_index: int, lam) -> int:
    return system.pair(alpha_index, lam)


# -- Weyl group action -----------------------------------------------------


def _reduce_to_dominant(system: RootSystem, vec):
    """Plain simple-reflection reduction; returns (dominant, parity, hit_zero)."""
    v = list(vec)
    n = system.rank
    cartan = system.cartan_matrix
    parity = 1
    hit_zero = False
    while True:
        j = next((i for i in range(n) if v[i] < 0), None)
        if j is None:
            break
        c = v[j]
        for i in range(n):
            v[i] -= c * cartan[j][i]
        parity = -parity
    if any(x == 0 for x in v):
        hit_zero = True
    return tuple(v), parity, hit_zero


def dominant_representative(system: RootSystem, v) -> tuple[Weight, int, bool]:
    """Reduce v under the rho-shifted Weyl action.

    Returns (v', parity, singular) where v' + rho is the dominant member of the
    Weyl orbit of v + rho, parity is the sign of the reducing element, and
    singular means v + rho lies on a reflection wall.
    """
    shifted = tuple(x + 1 for x in v)
    dom, parity, singular = _reduce_to_dominant(system, shifted)
    return tuple(x - 1 for x in dom), parity, singular


def weyl_orbit_equal(system: RootSystem, v1, v2) -> bool:
    """True iff v1 and v2 lie in the same (unshifted) Weyl orbit."""
    d1, _, _ = _reduce_to_dominant(system, v1)
    d2, _, _ = _reduce_to_dominant(system, v2)
    return d1 == d2


def in_root_lattice(system: RootSystem, v) -> bool:
    """True iff the weight v is an integer combination of roots."""
    return all(c.denominator == 1 for c in system.root_basis_coords(v))


# -- subsystems ------------------------------------------------------------


@dataclass(frozen=True)
class Subsystem:
    """A symmetric subset of the roots, stored by positive-root indices."""

    parent: RootSystem
    pos_indices: frozenset[int]

    @property
    def num_roots(self) -> int:
        return 2 * len(self.pos_indices)

    @property
    def num_positive(self) -> int:
        return len(self.pos_indices)

    def positive_vectors(self) -> list[Vector]:
        return [self.parent.positive_roots[i] for i in sorted(self.pos_indices)]

    def vectors(self) -> list[Vector]:
        pos = self.positive_vectors()
        return pos + [tuple(-x for x in v) for v in pos]

    def is_closed(self) -> bool:
        """Sum closure: a, b in S and a + b a root imply a + b in S."""
        vecs = self.vectors()
        members = set(vecs)
        for a in vecs:
            for b in vecs:
                if a == b:
                    continue
                s = _vadd(a, b)
                if any(s) and self.parent.is_root(s) and s not in members:
                    return False
        return True


def orthogonal_subsystem(system: RootSystem, v) -> Subsystem:
    """Roots whose coroots pair to zero with the weight v."""
    idx = frozenset(
        i for i in range(system.num_positive) if system.pair(i, v) == 0
    )
    return Subsystem(system, idx)


def _base_of(sub: Subsystem) -> list[int]:
    """Indecomposable positive members: the simple system of the subsystem."""
    vecs = {i: sub.parent.positive_roots[i] for i in sub.pos_indices}
    vset = set(vecs.values())
    base = []
    for i, v in sorted(vecs.items()):
        decomposable = any(
            _vsub(v, w) in vset for w in vset if w != v
        )
        if not decomposable:
            base.append(i)
    return base


def _cartan_of(vectors: list[Vector]) -> list[list[int]]:
    norms = [_dot(v, v) for v in vectors]
    return [
        [int(2 * _dot(a, b) / norms[j]) for j, b in enumerate(vectors)]
        for a in vectors
    ]


def _candidate_types(r: int) -> list[FamilyRank]:
    out = [FamilyRank("A", r)]
    if r >= 2:
        out.append(FamilyRank("B", r))
    if r >= 3:
        out.append(FamilyRank("C", r))
    if r >= 4:
        out.append(FamilyRank("D", r))
    if r in (6, 7, 8):
        out.append(FamilyRank("E", r))
    if r == 4:
        out.append(FamilyRank("F", 4))
    if r == 2:
        out.append(FamilyRank("G", 2))
    return out


def _cartan_match(mat: list[list[int]], ref) -> bool:
    """Existence of a vertex relabelling identifying the two Cartan matrices."""
    r = len(mat)
    used = [False] * r
    assign = [-1] * r

    def backtrack(i: int) -> bool:
        if i == r:
            return True
        for j in range(r):
            if used[j]:
                continue
            ok = True
            for k in range(i):
                if mat[i][k] != ref[j][assign[k]] or mat[k][i] != ref[assign[k]][j]:
                    ok = False
                    break
            if ok:
                used[j] = True
                assign[i] = j
                if backtrack(i + 1):
                    return True
                used[j] = False
        return False

    return backtrack(0)


def classify_subsystem(sub: Subsystem) -> list[FamilyRank]:
    """Type of a closed symmetric subsystem as a sorted list of components."""
    if not sub.pos_indices:
        return []
    if not sub.is_closed():
        raise ValueError("subsystem is not closed")
    base = _base_of(sub)
    vecs = [sub.parent.positive_roots[i] for i in base]
    cartan = _cartan_of(vecs)
    r = len(base)
    # connected components of the base diagram
    seen = [False] * r
    comps = []
    for s in range(r):
        if seen[s]:
            continue
        comp = []
        stack = [s]
        seen[s] = True
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(r):
                if not seen[j] and cartan[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(sorted(comp))
    types = []
    for comp in comps:
        sub_cartan = [[cartan[i][j] for j in comp] for i in comp]
        found = None
        for cand in _candidate_types(len(comp)):
            ref = build(cand).cartan_matrix
            if _cartan_match(sub_cartan, ref):
                found = cand
                break
        if found is None:
            raise ValueError("unrecognized component Cartan matrix")
        types.append(found)
    return sorted(types)


# -- global quadratic-form and spanning checks -----------------------------


def quadratic_nullspace_dim(system: RootSystem) -> int:
    """Dimension of the space of quadratic forms vanishing on every root.

    Forms are symmetric bilinear forms on the span of the roots, written in
    the simple-root basis; vanishing on all roots should pin the form to zero.
    """
    n = system.rank
    unknowns = [(i, j) for i in range(n) for j in range(i, n)]
    rows = []
    for coords in system.root_coords:
        row = []
        for i, j in unknowns:
            row.append(
                Fraction(coords[i] * coords[j] if i == j else 2 * coords[i] * coords[j])
            )
        rows.append(row)
    return len(unknowns) - rank(rows)


def spanning_check(system: RootSystem) -> bool:
    """For every root a, the roots not orthogonal to a span the whole space."""
    n = system.rank
    for i in range(system.num_positive):
        coroot = system.coroots[i]
        basis = SpanBasis(n)
        for coords, fund in zip(system.root_coords, _root_fundamentals(system)):
            if sum(c * f for c, f in zip(coroot, fund)) != 0:
                if basis.add(coords) and basis.rank == n:
                    break
        if basis.rank < n:
            return False
    return True


@lru_cache(maxsize=None)
def _root_fundamentals_cached(fr: FamilyRank) -> tuple[Weight, ...]:
    system = build(fr)
    return tuple(system.root_fundamental(i) for i in range(system.num_positive))


def _root_fundamentals(system: RootSystem) -> tuple[Weight, ...]:
    return _root_fundamentals_cached(system.id)
