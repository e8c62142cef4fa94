"""Efficiency and level invariants of irreducible root systems.

The efficiency of a root system R is the largest value of
|R'| / (|R| - |R''|) over pairs of disjoint proper subsystems with R'
nonempty, and the level of R is the smallest positive-root count of R'
among maximizing pairs.  eff_formula returns the closed-form values for
the irreducible families; eff_bruteforce recomputes them by exhaustive
search on systems with at most 24 positive roots.

Two subsystem classes appear here and they are not the same thing.
enumerate_closed_subsystems lists every symmetric subset closed under
root addition.  The brute-force optimum is taken over the smaller class
of full subsystems, those of the form R intersected with a subspace;
taking the larger class would admit pairs like the long A2 inside G2
whose ratio exceeds the tabulated efficiency.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from ._linalg import SpanBasis, nullspace, rank
from .rootsys import FamilyRank, RootSystem, Subsystem, build

# Exhaustive search is limited to systems no larger than F4.
_BRUTE_LIMIT = 24


@dataclass(frozen=True)
class EffResult:
    eff: Fraction
    lev: int
    witness: Optional[tuple[Subsystem, Subsystem]] = None


def eff_formula(ident) -> EffResult:
    """Tabulated efficiency and level for an irreducible type."""
    fr = FamilyRank.parse(ident) if isinstance(ident, str) else ident
    n = fr.rank
    if fr.family == "A":
        return EffResult(Fraction(n, n + 2), n * (n - 1) // 2)
    if fr.family in ("B", "C"):
        return EffResult(Fraction(n - 1, n + 1), (n - 1) ** 2)
    if fr.family == "D":
        return EffResult(Fraction(n - 1, n + 1), (n - 1) * (n - 2))
    table = {
        ("E", 6): (Fraction(10, 17), 20),
        ("E", 7): (Fraction(3, 5), 36),
        ("E", 8): (Fraction(7, 13), 63),
        ("F", 4): (Fraction(3, 7), 9),
        ("G", 2): (Fraction(1, 5), 1),
    }
    eff, lev = table[(fr.family, fr.rank)]
    return EffResult(eff, lev)


def _as_system(arg) -> RootSystem:
    return arg if isinstance(arg, RootSystem) else build(arg)


def _check_size(system: RootSystem) -> None:
    if system.num_positive > _BRUTE_LIMIT:
        raise ValueError(
            f"{system.id} has {system.num_positive} positive roots; "
            f"exhaustive search is limited to {_BRUTE_LIMIT}"
        )


def _forced_table(system: RootSystem) -> list[list[tuple[int, ...]]]:
    """forced[i][j] = positive-root indices that i and j jointly force.

    A symmetric set containing +-a and +-b must contain a+b and a-b
    whenever those are roots, so closure can be tracked on positive
    indices alone.
    """
    pos = system.positive_roots
    index = {v: i for i, v in enumerate(pos)}
    m = len(pos)
    forced = [[() for _ in range(m)] for _ in range(m)]
    for i in range(m):
        for j in range(i):
            need = []
            s = tuple(a + b for a, b in zip(pos[i], pos[j]))
            if s in index:
                need.append(index[s])
            d = tuple(a - b for a, b in zip(pos[i], pos[j]))
            if d in index:
                need.append(index[d])
            else:
                neg = tuple(-x for x in d)
                if neg in index:
                    need.append(index[neg])
            forced[i][j] = forced[j][i] = tuple(need)
    return forced


def _close(mask: int, forced) -> int:
    stack = [i for i in range(len(forced)) if mask >> i & 1]
    while stack:
        i = stack.pop()
        for j in range(len(forced)):
            if i != j and mask >> j & 1:
                for k in forced[i][j]:
                    if not mask >> k & 1:
                        mask |= 1 << k
                        stack.append(k)
    return mask


def enumerate_closed_subsystems(system) -> list[Subsystem]:
    """All symmetric closed subsets of the roots, empty set and R included.

    DFS over positive-root index order: each known closed set is extended
    by one generator and re-closed, deduplicating by bitmask.
    """
    system = _as_system(system)
    _check_size(system)
    forced = _forced_table(system)
    m = system.num_positive
    seen = {0}
    stack = [0]
    while stack:
        mask = stack.pop()
        for i in range(m):
            if mask >> i & 1:
                continue
            ext = _close(mask | 1 << i, forced)
            if ext not in seen:
                seen.add(ext)
                stack.append(ext)
    out = [
        Subsystem(system, frozenset(i for i in range(m) if mask >> i & 1))
        for mask in seen
    ]
    out.sort(key=lambda s: (s.num_positive, sorted(s.pos_indices)))
    return out


def _full_subsystem_masks(system: RootSystem) -> list[int]:
    """Bitmasks of subsystems of the form R intersected with a subspace.

    Breadth-first over subspaces spanned by roots, one dimension at a
    time.  A subspace spanned by roots is spanned by the roots it
    contains, so the mask determines the subspace and dedup is sound.
    Simple-root coordinates keep the elimination small.
    """
    pos = system.root_coords
    m = len(pos)
    dim = system.rank
    found = {0}
    frontier: list[tuple[int, SpanBasis]] = [(0, SpanBasis(dim))]
    while frontier:
        grown: list[tuple[int, SpanBasis]] = []
        for mask, basis in frontier:
            for i in range(m):
                if mask >> i & 1:
                    continue
                bigger = SpanBasis(dim)
                for row in basis.rows:
                    bigger.add(row)
                if not bigger.add(pos[i]):
                    continue
                ext = 0
                for j in range(m):
                    if bigger.contains(pos[j]):
                        ext |= 1 << j
                if ext not in found:
                    found.add(ext)
                    grown.append((ext, bigger))
        frontier = grown
    return sorted(found)


def eff_bruteforce(system) -> EffResult:
    """Exhaustive efficiency over pairs of disjoint full subsystems.

    R' ranges over nonempty proper full subsystems, R'' over full
    subsystems disjoint from R'.  Among maximizing pairs the witness has
    the fewest positive roots in R', ties broken by index order.
    """
    system = _as_system(system)
    _check_size(system)
    masks = _full_subsystem_masks(system)
    total = system.num_roots
    full = (1 << system.num_positive) - 1
    primaries = [mk for mk in masks if mk and mk != full]
    if not primaries:
        raise ValueError(f"{system.id} has no nonempty proper subsystem")
    best = None
    best_key = None
    for m1 in primaries:
        size1 = 2 * m1.bit_count()
        for m2 in masks:
            if m1 & m2:
                continue
            eff = Fraction(size1, total - 2 * m2.bit_count())
            key = (-eff, m1.bit_count(), _bits(m1), _bits(m2))
            if best_key is None or key < best_key:
                best_key = key
                best = (eff, m1, m2)
    eff, m1, m2 = best
    witness = (
        Subsystem(system, frozenset(_bits(m1))),
        Subsystem(system, frozenset(_bits(m2))),
    )
    return EffResult(eff, m1.bit_count(), witness)


def _bits(mask: int) -> tuple[int, ...]:
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def compare(first, second) -> str:
    """Order two irreducible types by efficiency, then by level.

    S dominates T when eff(S) > eff(T), or the efficiencies tie and
    lev(S) <= lev(T).  Domination both ways is "equivalent" and happens
    only for B_n versus C_n (and S = T).  Since the efficiencies are
    totally ordered rationals, "incomparable-resolved" is unreachable;
    the branch exists to make the result set explicit.
    """
    a = eff_formula(first)
    b = eff_formula(second)
    forward = a.eff > b.eff or (a.eff == b.eff and a.lev <= b.lev)
    backward = b.eff > a.eff or (b.eff == a.eff and b.lev <= a.lev)
    if forward and backward:
        return "equivalent"
    if forward:
        return "greater"
    if backward:
        return "less"
    return "incomparable-resolved"


def coxeter_bound(system: RootSystem, sub: Subsystem) -> Fraction:
    """1 + max/min of the positive values of a form vanishing on Span(sub).

    sub must span a hyperplane of the root space.  The linear form is
    then unique there up to scale, and negating it permutes the roots'
    value set, so the ratio is well defined.
    """
    if sub.parent is not system:
        raise ValueError("subsystem does not belong to this root system")
    rows = [list(v) for v in sub.positive_vectors()]
    if rank(rows) != system.rank - 1:
        raise ValueError("subsystem must span a hyperplane of the root space")
    dim = len(system.positive_roots[0])
    candidates = nullspace(rows, dim)
    outside = [
        system.positive_roots[i]
        for i in range(system.num_positive)
        if i not in sub.pos_indices
    ]
    form = next(
        f for f in candidates
        if any(_apply(f, v) for v in outside)
    )
    values = []
    for v in outside:
        x = _apply(form, v)
        if x:
            values.append(abs(x))
    return 1 + max(values) / min(values)


def _apply(form, vec) -> Fraction:
    return sum(f * x for f, x in zip(form, vec))
