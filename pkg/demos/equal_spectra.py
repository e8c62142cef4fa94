"""Two non-isomorphic quotients of SU(2)^128 with the same degree counts.

A trace function on the eight-element group (Z/2)^3 with the right
divisibility and positivity builds a homomorphism into {+-1}^n, hence
a central subgroup of SU(2)^n. Twisting the trace by a nonlinear
permutation of the nonzero points gives a second subgroup with the
same weight multiset, so degree counts agree to every bound, yet no
coordinate permutation carries one subgroup to the other.

Run: python3 demos/equal_spectra.py
"""

from weylzeta import (
    DEFAULT_TRACE,
    DEFAULT_TWIST,
    build_sign_hom,
    build_trace,
    fourier_multiplicities,
    group_string,
    quotient_zeta,
    twist,
    verify_gassmann,
)


def main():
    f = build_trace(DEFAULT_TRACE)
    g = twist(f, DEFAULT_TWIST)
    print("trace values      ", f.values)
    print("twisted trace     ", g.values)
    print("multiplicities    ", fourier_multiplicities(f))
    print("twisted           ", fourier_multiplicities(g))
    print()

    hom = build_sign_hom(f)
    print("first quotient    ", group_string(hom))
    print("second quotient   ", group_string(build_sign_hom(g)))
    print()

    table = quotient_zeta(hom, 50)
    pairs = ", ".join(f"{d}:{c}" for d, c in sorted(table.counts.items()) if c)
    print("degree counts to 50:", pairs)
    print()

    report = verify_gassmann(DEFAULT_TRACE, DEFAULT_TWIST, 10**4)
    print(f"counts agree up to 10^4:    {report.zeta_equal}")
    print(f"related by a permutation:   {report.perm_equivalent}")


if __name__ == "__main__":
    main()
