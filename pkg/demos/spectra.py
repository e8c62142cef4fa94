"""Degree spectra of a few small groups, side by side.

Run: python3 demos/spectra.py
"""

from weylzeta import GroupSpec, zeta_coefficients, zeta_star_coefficients


def show(label, table):
    pairs = ", ".join(f"{d}:{c}" for d, c in sorted(table.counts.items()) if c)
    print(f"{label:>22}  {pairs}")


def main():
    print("Counts of irreducible representations by dimension, up to 30.")
    print("Format is dimension:count, zero counts omitted.\n")
    for text in ("A1:sc", "A1:adjoint", "A2:sc", "A2:adjoint", "B2:sc"):
        show(text, zeta_coefficients(GroupSpec.parse(text), 30))

    print()
    print("The adjoint form keeps only weights in the root lattice, so")
    print("SO(3) sees the odd dimensions of SU(2) and nothing else.")

    print()
    print("Restricting further to weights allowable at every prime gives")
    print("the starred spectrum. For SU(2) only powers of 2 survive:")
    star = zeta_star_coefficients(GroupSpec.parse("A1:sc"), 100)
    show("A1:sc (starred)", star)

    print()
    print("Products multiply degrees. SU(2) x SU(3) up to 12:")
    show("A1xA2:sc", zeta_coefficients(GroupSpec.parse("A1xA2:sc"), 12))


if __name__ == "__main__":
    main()
