"""Dimension polynomials along a line of weights.

For a weight pair (mu, nu) the map n -> dim V(n*mu + nu) is a
polynomial with rational coefficients. Each family carries a built-in
pair whose polynomial witnesses the family's efficiency.

Run: python3 demos/polynomials.py
"""

from math import gcd

from weylzeta import (
    FamilyRank,
    build,
    degree,
    evaluate,
    explicit_pair,
    explicit_polynomial,
    ord_at_zero,
    weyl_polynomial,
)


def main():
    a2 = build("A2")
    P = weyl_polynomial(a2, (1, 0), (0, 0))
    print("SU(3) along n*(1,0): coefficients", P)
    print("values at n = 1..5:", [int(evaluate(P, n)) for n in range(1, 6)])
    print()

    print("Built-in pairs, their polynomial order at 0 and degree:")
    for name in ("A3", "B3", "C3", "D4", "G2", "F4", "E6"):
        fr = FamilyRank.parse(name)
        pair = explicit_pair(fr)
        P = explicit_polynomial(fr)
        print(f"  {name}: mu={pair.mu} nu={pair.nu}"
              f"  ord={ord_at_zero(P)} deg={degree(P)}")
    print()

    print("Values of the E7 polynomial are divisible by 5 but share no")
    print("larger factor, which pins down certain degree ratios exactly:")
    P = explicit_polynomial(FamilyRank.parse("E7"))
    v2, v3 = int(evaluate(P, 2)), int(evaluate(P, 3))
    print(f"  P(2) = {v2}")
    print(f"  P(3) = {v3}")
    print(f"  gcd  = {gcd(v2, v3)}")


if __name__ == "__main__":
    main()
