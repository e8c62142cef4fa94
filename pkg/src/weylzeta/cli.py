"""Command-line surface: spectra, polynomials, efficiency, verification.

Exit codes: 0 on success (and on an all-PASS ledger), 1 when a
verification fails, 2 on usage errors including malformed group
strings, weights, and flag combinations.
"""

from __future__ import annotations

import argparse
import hashlib
import os
import re
import sys
from pathlib import Path

from .efficiency import compare as compare_efficiency
from .efficiency import eff_bruteforce, eff_formula
from .gassmann import DEFAULT_TRACE, DEFAULT_TWIST, verify_gassmann
from .repdegrees import (
    DegreeTable,
    GroupSpec,
    dim_irrep,
    zeta_coefficients,
    zeta_star_coefficients,
)
from .rootsys import FamilyRank, build, classify_subsystem
from .verify import run_checks
from .weylpoly import (
    degree,
    evaluate,
    explicit_pair,
    ord_at_zero,
    weyl_polynomial,
)

CACHE_ENV = "WEYLZETA_CACHE"


def _parse_type(text: str) -> FamilyRank:
    return FamilyRank.parse(text)


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"{what} must be comma-separated integers: {text!r}")


def _require_rank(values: tuple[int, ...], rank: int, what: str) -> None:
    if len(values) != rank:
        raise ValueError(f"{what} needs {rank} coordinates, got {len(values)}")


# -- coefficient cache -----------------------------------------------------


def _cache_dir(args) -> Path | None:
    path = args.cache or os.environ.get(CACHE_ENV)
    return Path(path) if path else None


def _cache_path(directory: Path, canonical: str, variant: str) -> Path:
    stem = re.sub(r"[^A-Za-z0-9]+", "_", canonical).strip("_")
    tag = hashlib.sha256(canonical.encode()).hexdigest()[:8]
    return directory / f"{stem}-{tag}.{variant}.tsv"


def _cached_table(spec: GroupSpec, variant: str, bound: int,
                  directory: Path | None) -> DegreeTable:
    canonical = spec.canonical()
    if directory is not None and directory.is_dir():
        for path in sorted(directory.glob("*.tsv")):
            try:
                table = DegreeTable.from_text(path.read_text())
            except (OSError, ValueError):
                continue
            if (table.group == canonical and table.variant == variant
                    and table.bound >= bound):
                return table.truncated(bound)
    fn = zeta_coefficients if variant == "zeta" else zeta_star_coefficients
    table = fn(spec, bound)
    if directory is not None:
        directory.mkdir(parents=True, exist_ok=True)
        _cache_path(directory, canonical, variant).write_text(table.to_text())
    return table


# -- subcommands -----------------------------------------------------------


def _cmd_info(args) -> int:
    system = build(_parse_type(args.type))
    res = eff_formula(system.id)
    print(f"type: {system.id}")
    print(f"roots: {system.num_roots}")
    print(f"positive roots: {system.num_positive}")
    print("cartan:")
    for row in system.cartan_matrix:
        print("  " + " ".join(f"{v:>2}" for v in row))
    print(f"eff: {res.eff}")
    print(f"lev: {res.lev}")
    return 0


def _cmd_dims(args) -> int:
    system = build(_parse_type(args.type))
    weight = _parse_ints(args.weight, "--weight")
    _require_rank(weight, system.rank, "--weight")
    if any(c < 0 for c in weight):
        raise ValueError("--weight coordinates must be nonnegative")
    print(dim_irrep(system, weight))
    return 0


def _cmd_zeta(args, variant: str) -> int:
    spec = GroupSpec.parse(args.group)
    if args.max_dim < 1:
        raise ValueError("--max-dim must be positive")
    table = _cached_table(spec, variant, args.max_dim, _cache_dir(args))
    text = table.to_text()
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_weylpoly(args) -> int:
    fr = _parse_type(args.type)
    system = build(fr)
    if args.mu is not None or args.nu is not None:
        if args.explicit:
            raise ValueError("--explicit excludes --mu/--nu")
        if args.mu is None or args.nu is None:
            raise ValueError("--mu and --nu must be given together")
        mu = _parse_ints(args.mu, "--mu")
        nu = _parse_ints(args.nu, "--nu")
        _require_rank(mu, system.rank, "--mu")
        _require_rank(nu, system.rank, "--nu")
    else:
        pair = explicit_pair(fr)
        mu, nu = pair.mu, pair.nu
    P = weyl_polynomial(system, mu, nu)
    print(f"mu: {','.join(map(str, mu))}")
    print(f"nu: {','.join(map(str, nu))}")
    print(f"coefficients: {P}")
    if any(P.coefficients):
        print(f"ord: {ord_at_zero(P)}")
        print(f"deg: {degree(P)}")
    for n in _parse_ints(args.eval, "--eval") if args.eval else ():
        print(f"P({n}) = {evaluate(P, n)}")
    return 0


def _cmd_efficiency(args) -> int:
    fr = _parse_type(args.type)
    res = eff_formula(fr)
    print(f"eff: {res.eff}")
    print(f"lev: {res.lev}")
    if args.brute_force:
        brute = eff_bruteforce(fr)
        print(f"brute-force eff: {brute.eff}")
        print(f"brute-force lev: {brute.lev}")
        names = ["x".join(str(t) for t in classify_subsystem(part)) or "empty"
                 for part in brute.witness]
        print(f"witness: {names[0]} | {names[1]}")
    return 0


def _cmd_compare(args) -> int:
    print(compare_efficiency(_parse_type(args.first), _parse_type(args.second)))
    return 0


def _cmd_gassmann(args) -> int:
    if args.max_degree < 1:
        raise ValueError("--max-degree must be positive")
    report = verify_gassmann(DEFAULT_TRACE, DEFAULT_TWIST, args.max_degree)
    print(f"n: {report.n}")
    print(f"zeta tables equal up to {args.max_degree}: {str(report.zeta_equal).lower()}")
    print(f"permutation equivalent: {str(report.perm_equivalent).lower()}")
    ok = report.zeta_equal and not report.perm_equivalent
    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


def _cmd_verify(args) -> int:
    failed = 0
    for result in run_checks(fast=args.fast):
        if result.passed:
            print(f"PASS {result.title}")
        else:
            failed += 1
            print(f"FAIL {result.title}: {result.detail}")
    return 1 if failed else 0


# -- wiring ----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylzeta",
        description="Representation-degree spectra of compact semisimple groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="size, Cartan matrix, and efficiency of a type")
    p.add_argument("--type", required=True, metavar="F<n>")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("dims", help="dimension of one irreducible representation")
    p.add_argument("--type", required=True, metavar="F<n>")
    p.add_argument("--weight", required=True, metavar="a1,..,an")
    p.set_defaults(func=_cmd_dims)

    for name, variant in (("zeta", "zeta"), ("zeta-star", "zeta_star")):
        p = sub.add_parser(name, help=f"degree counts ({variant}) up to a bound")
        p.add_argument("--group", required=True, metavar="SPEC")
        p.add_argument("--max-dim", required=True, type=int, metavar="D")
        p.add_argument("--out", metavar="FILE")
        p.add_argument("--cache", metavar="DIR",
                       help=f"table cache directory (default: ${CACHE_ENV})")
        p.set_defaults(func=lambda a, v=variant: _cmd_zeta(a, v))

    p = sub.add_parser("weylpoly", help="dimension polynomial of a weight pair")
    p.add_argument("--type", required=True, metavar="F<n>")
    p.add_argument("--explicit", action="store_true",
                   help="use the built-in pair (the default)")
    p.add_argument("--mu", metavar="a1,..,an")
    p.add_argument("--nu", metavar="a1,..,an")
    p.add_argument("--eval", metavar="n1,n2,..")
    p.set_defaults(func=_cmd_weylpoly)

    p = sub.add_parser("efficiency", help="efficiency and level of a type")
    p.add_argument("--type", required=True, metavar="F<n>")
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(func=_cmd_efficiency)

    p = sub.add_parser("compare", help="order two types by efficiency data")
    p.add_argument("--first", required=True, metavar="F<n>")
    p.add_argument("--second", required=True, metavar="F<n>")
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("gassmann", help="equal-spectrum quotient pair report")
    p.add_argument("--n128", action="store_true",
                   help="use the built-in rank-128 construction (the default)")
    p.add_argument("--max-degree", required=True, type=int, metavar="D")
    p.set_defaults(func=_cmd_gassmann)

    p = sub.add_parser("verify-paper",
                       help="regression ledger of reference values")
    p.add_argument("--fast", action="store_true",
                   help="skip the two slowest searches")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main_entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    main_entry()
