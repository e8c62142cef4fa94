"""The efficiency invariant, by formula and by exhaustive search.

Efficiency measures how slowly representation dimensions can grow
along a ray of weights; the level counts positive roots left out of
the slowest direction. Together they order the simple types.

Run: python3 demos/efficiency_tour.py
"""

from weylzeta import (
    classify_subsystem,
    compare,
    coxeter_bound,
    eff_bruteforce,
    eff_formula,
    enumerate_closed_subsystems,
    build,
    orthogonal_subsystem,
)


def main():
    print("Closed forms:")
    for name in ("A1", "A2", "A5", "B4", "C4", "D5", "E6", "E7", "E8", "F4", "G2"):
        res = eff_formula(name)
        print(f"  {name:>3}: eff = {str(res.eff):>5}  lev = {res.lev}")
    print()

    print("Search over pairs of disjoint full subsystems agrees and names")
    print("the maximizing subsystem:")
    for name in ("A3", "B3", "D4", "G2"):
        res = eff_bruteforce(name)
        kept = "x".join(str(t) for t in classify_subsystem(res.witness[0]))
        print(f"  {name}: eff = {res.eff}  witness {kept}")
    print()

    print("A3, D4 and E7 all have efficiency 3/5; the level breaks the tie:")
    for a, b in (("A3", "D4"), ("D4", "E7"), ("A3", "E7")):
        print(f"  {a} vs {b}: {compare(a, b)}")
    print(f"  B5 vs C5: {compare('B5', 'C5')}")
    print()

    g2 = build("G2")
    subs = enumerate_closed_subsystems(g2)
    print(f"G2 has {len(subs)} closed symmetric subsystems, with")
    print(f"{sorted(s.num_positive for s in subs)} positive roots each.")
    print()

    b2 = build("B2")
    long_sub = orthogonal_subsystem(b2, (0, 1))  # weight orthogonal to the long root
    print("Root-length ratios bound Coxeter numbers of corank-1 subsystems.")
    print(f"B2 over its long A1: bound {coxeter_bound(b2, long_sub)}")


if __name__ == "__main__":
    main()
