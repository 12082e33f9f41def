"""Command-line interface.

Subcommands: ``sig`` (signature/nullity at a torus point), ``scan`` (grid
scan to CSV), ``bound`` (splitting/unlinking lower bounds from a fixture
file or inline values) and ``twobridge`` (Conway-form construction and the
splitting-number computation for the even two-bridge family).

Exit codes: 0 on success, 2 on input or parse errors, 3 on data-invariant
violations.  Output is deterministic: identical invocations print
byte-identical text.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog
from .bounds import (
    ComponentInvariants,
    evaluate_fixture,
    linking_number_bound,
    splitting_bound_lt,
    splitting_bound_multivariable,
    unlinking_bound,
)
from .catalog import CatalogError
from .ccomplex import TorusPoint, validate
from .hermitian import DEFAULT_TOL
from .invariants import signature_nullity, torus_scan, write_scan_csv
from .twobridge import ConwayForm, build_gss, predicted_splitting

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INVARIANT = 3


def _parse_omega(text: str, mu: int | None = None) -> TorusPoint:
    point = TorusPoint.from_strings(text.split(","))
    if mu is not None and point.mu != mu:
        raise ValueError(f"omega has {point.mu} coordinates, the system has {mu} colors")
    return point


def _load_validated_system(token: str):
    system = catalog.resolve_system(token)
    violations = validate(system)
    return system, violations


def _report_violations(violations) -> int:
    for violation in violations:
        print(f"invariant violation: {violation}", file=sys.stderr)
    return EXIT_INVARIANT


def cmd_sig(args) -> int:
    system, violations = _load_validated_system(args.system)
    if violations:
        return _report_violations(violations)
    omega = _parse_omega(args.omega, system.mu)
    sigma, eta = signature_nullity(system, omega, args.tol)
    print(f"sigma={sigma} eta={eta}")
    return EXIT_OK


def cmd_scan(args) -> int:
    system, violations = _load_validated_system(args.system)
    if violations:
        return _report_violations(violations)
    if system.mu > 3:
        raise ValueError(f"scan supports at most 3 colors, system has {system.mu}")
    if args.res < 1:
        raise ValueError("resolution must be at least 1")
    grid = torus_scan(system, args.res, args.tol)
    write_scan_csv(grid, args.out)
    print(f"rows={len(grid.samples)} min_eta={grid.min_eta} near_zero_det={grid.near_zero_count}")
    return EXIT_OK


def _inline_components(args, mu: int) -> ComponentInvariants:
    if not args.component:
        return ComponentInvariants.unknots(mu)
    pairs = []
    for item in args.component:
        fields = item.split(",")
        if len(fields) != 2:
            raise ValueError(f"--component expects 'sigma,eta', got {item!r}")
        pairs.append((int(fields[0]), int(fields[1])))
    if len(pairs) != mu:
        raise ValueError(f"{len(pairs)} --component values for {mu} colors")
    return ComponentInvariants.of(*pairs)


def _require(args, names) -> None:
    missing = [f"--{name.replace('_', '-')}" for name in names if getattr(args, name) is None]
    if missing:
        raise ValueError(f"missing required inputs: {', '.join(missing)}")


def _linking_matrix(args):
    values = [int(v) for v in args.lk.split(",")]
    mu = args.mu
    if mu is None:
        # smallest mu with mu*(mu-1)/2 upper-triangle entries
        mu = next((m for m in range(2, 20) if m * (m - 1) // 2 == len(values)), None)
        if mu is None:
            raise ValueError(f"{len(values)} linking values do not fill an upper triangle")
    matrix = [[0] * mu for _ in range(mu)]
    it = iter(values)
    try:
        for i in range(mu):
            for j in range(i + 1, mu):
                matrix[i][j] = matrix[j][i] = next(it)
    except StopIteration:
        raise ValueError(f"--lk needs {mu * (mu - 1) // 2} values for mu={mu}") from None
    if any(True for _ in it):
        raise ValueError(f"--lk needs {mu * (mu - 1) // 2} values for mu={mu}")
    return mu, matrix


def _pair_flags(items, flag: bool) -> dict:
    flags = {}
    for item in items or []:
        fields = item.split(",")
        if len(fields) != 2:
            raise ValueError(f"pair flags expect 'i,j', got {item!r}")
        i, j = int(fields[0]) - 1, int(fields[1]) - 1
        flags[(i, j)] = flag
    return flags


def cmd_bound(args) -> int:
    kind_by_formula = {"split-lt": "lt", "split-multi": "multi", "rank": "rank"}
    name = None

    if args.fixture is not None:
        if args.formula not in kind_by_formula:
            raise ValueError(f"formula {args.formula!r} takes inline flags, not a fixture file")
        record = catalog.resolve_fixture(args.fixture)
        expected_kind = kind_by_formula[args.formula]
        if record.get("kind") != expected_kind:
            raise ValueError(
                f"fixture {record.get('name', args.fixture)!r} has kind "
                f"{record.get('kind')!r}, expected {expected_kind!r}"
            )
        report = evaluate_fixture(record)
        name = record.get("name")
    elif args.formula == "split-lt":
        _require(args, ["mu", "sigma_l", "eta_l", "total_lk"])
        report = splitting_bound_lt(
            mu=args.mu,
            sigma_lt=args.sigma_l,
            eta_lt=args.eta_l,
            total_linking=args.total_lk,
            comps=_inline_components(args, args.mu),
            omega=_parse_omega(args.omega) if args.omega else None,
        )
    elif args.formula == "split-multi":
        _require(args, ["mu", "sigma_l", "eta_l"])
        report = splitting_bound_multivariable(
            mu=args.mu,
            sigma_l=args.sigma_l,
            eta_l=args.eta_l,
            comps=_inline_components(args, args.mu),
            omega=_parse_omega(args.omega) if args.omega else None,
            total_linking=args.total_lk,
        )
    elif args.formula == "linking":
        _require(args, ["lk"])
        _, matrix = _linking_matrix(args)
        flags = _pair_flags(args.nonsplit, True)
        flags.update(_pair_flags(args.split, False))
        report = linking_number_bound(matrix, flags)
    elif args.formula == "unlink":
        _require(args, ["mu", "sigma_l", "eta_l", "lk"])
        values = [int(v) for v in args.lk.split(",")]
        report = unlinking_bound(args.mu, args.sigma_l, args.eta_l, values)
    else:  # rank without a fixture
        raise ValueError("the rank obstruction is evaluated from a fixture file")

    prefix = f"name={name} " if name else ""
    print(prefix + report.render())
    return EXIT_OK


def cmd_twobridge(args) -> int:
    form = ConwayForm.parse(args.form)
    system = build_gss(form)
    sigma, eta = signature_nullity(system, TorusPoint.minus_ones(2), args.tol)
    s = predicted_splitting(form)
    bound = splitting_bound_multivariable(2, sigma, eta, ComponentInvariants.unknots(2)).value
    agree = "yes" if bound == s else "no"
    print(f"s={s} sigma={sigma} eta={eta} bound={bound} sp={s} agree={agree}")
    if args.omega:
        omega = _parse_omega(args.omega, 2)
        sig_o, eta_o = signature_nullity(system, omega, args.tol)
        print(f"omega={omega} sigma={sig_o} eta={eta_o}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linksig",
        description="Multivariable link signatures and splitting-number bounds "
        "from generalized Seifert matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sig = sub.add_parser("sig", help="signature and nullity at a torus point")
    p_sig.add_argument("system", help="system file, shipped name, or Conway form C(...)")
    p_sig.add_argument("--omega", required=True, help="comma-separated angle fractions, e.g. 1/2,1/2")
    p_sig.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_sig.set_defaults(func=cmd_sig)

    p_scan = sub.add_parser("scan", help="grid scan of sigma, eta and |det H| to CSV")
    p_scan.add_argument("system")
    p_scan.add_argument("--res", type=int, required=True, help="samples per axis")
    p_scan.add_argument("--out", required=True, help="output CSV path")
    p_scan.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_scan.set_defaults(func=cmd_scan)

    p_bound = sub.add_parser("bound", help="evaluate a lower bound")
    p_bound.add_argument(
        "formula", choices=["split-multi", "split-lt", "linking", "rank", "unlink"]
    )
    p_bound.add_argument("fixture", nargs="?", help="fixture file or shipped fixture name")
    p_bound.add_argument("--mu", type=int)
    p_bound.add_argument("--sigma-l", dest="sigma_l", type=int)
    p_bound.add_argument("--eta-l", dest="eta_l", type=int)
    p_bound.add_argument("--total-lk", dest="total_lk", type=int)
    p_bound.add_argument("--lk", help="comma-separated pairwise linking numbers, i<j row-major")
    p_bound.add_argument("--component", action="append", help="per-color 'sigma,eta', repeatable")
    p_bound.add_argument("--nonsplit", action="append", help="1-based pair 'i,j' known non-split")
    p_bound.add_argument("--split", action="append", help="1-based pair 'i,j' known split")
    p_bound.add_argument("--omega", help="evaluation point, for the report only")
    p_bound.set_defaults(func=cmd_bound)

    p_tb = sub.add_parser("twobridge", help="two-bridge construction C(2a_1,b_1,...,2a_n)")
    p_tb.add_argument("form", help="comma-separated positive coefficients, e.g. 4,3,2")
    p_tb.add_argument("--omega", help="optional extra evaluation point")
    p_tb.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p_tb.set_defaults(func=cmd_twobridge)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        catalog.self_check()
    except CatalogError as exc:
        print(f"catalog self-check failed: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
