"""Command-line front end.

Subcommands:

    compute CASE.json           Brauer group of one stratification case
    verify-catalog              check every shipped entry against its expected value
    residue SCENARIO.json       per-divisor residue report for a symbol scenario
    schur --orders 2,2,2,2      Schur multiplier modulo Amitsur generators

Exit codes: 0 success, 1 mathematical mismatch (or uncertified residues),
2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .abelian import AbelianGroup, InvalidInput
from .catalog import load_catalog, select, verify
from .poly import ParseError
from .residue import ResidueError, SquareClass
from .scenario import compare_expected, load_scenario
from .solver import DEFAULT_ORACLE_CAP, brauer_from_amitsur, schur_basis, solve
from .strata import GroupSpec, load_case

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2


def _print_json(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def cmd_compute(args) -> int:
    case = load_case(args.case)
    result = solve(case)
    if args.json:
        _print_json(result.to_json())
        return EXIT_OK
    print(f"{result.label}: {result.total}")
    print(f"  ramified:   {result.ramified_part}")
    print(f"  unramified: {result.unramified_part}")
    for n, g in sorted(result.per_n.items()):
        print(f"  {n}-torsion: {g}")
    if case.expected_brauer is not None and case.expected_brauer != result.total:
        print(f"  expected {case.expected_brauer}", file=sys.stderr)
    return EXIT_OK


def cmd_verify_catalog(args) -> int:
    entries = select(load_catalog(args.catalog), args.filter)
    report = verify(entries, args.oracle_cap)
    if args.json:
        _print_json(report.to_json(timing=not args.no_timing))
    else:
        width = max((len(e.label) for e in report.entries), default=5)
        for e in report.entries:
            status = "ok" if e.match else "MISMATCH"
            shown = e.computed
            if e.kind != "symbol-scenario":
                shown = str(AbelianGroup(tuple(e.computed)))
            else:
                shown = e.computed["summary"]
            print(f"{e.label:<{width}}  {e.kind:<15}  {status:<8}  {shown}  [oracle: {e.oracle}]")
            for p in e.problems:
                print(f"{'':<{width}}    {p}")
        s = report.summary()
        print(f"{s['matched']}/{s['total']} entries match; oracle checked {s['oracle_checked']}, skipped {s['oracle_skipped']}")
    if not report.ok:
        print("mismatched: " + ", ".join(report.mismatched), file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_residue(args) -> int:
    scenario = load_scenario(args.scenario)
    report = scenario.run()
    diffs = compare_expected(scenario, report)
    if args.json:
        out = report.to_json()
        out["scenario"] = scenario.name
        out["expectation_mismatches"] = diffs
        _print_json(out)
    else:
        print(f"scenario {scenario.name}")
        for d in report.divisors:
            r = d.report
            flags = []
            if d.killed_by_stabilizer:
                flags.append(f"killed by stabilizer (|I|={d.stabilizer_order})")
            flags.append("pass" if d.passes else "FAIL")
            print(f"  {d.name}: v(a)={r.v_a} v(b)={r.v_b} residue {r.representative} -> {d.residue.value} [{d.strategy}] {'; '.join(flags)}")
            if d.detail:
                print(f"      {d.detail}")
        for line in diffs:
            print(f"  expectation mismatch: {line}")
        print(report.summary())
    if report.unknown and not args.allow_unknown:
        print("uncertified residues at " + ", ".join(report.unknown), file=sys.stderr)
        return EXIT_MISMATCH
    definite = [d.name for d in report.divisors if not d.passes and d.residue is not SquareClass.UNKNOWN]
    if diffs or definite:
        return EXIT_MISMATCH
    return EXIT_OK


def _parse_orders(text: str) -> tuple[int, ...]:
    try:
        orders = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise InvalidInput(f"--orders expects comma-separated integers, got {text!r}") from None
    if not orders or any(n < 1 for n in orders):
        raise InvalidInput("--orders needs at least one positive integer")
    return orders


def _parse_am(text: str | None, width: int) -> list[list[int]]:
    """Generators separated by ';'.

    Each is a comma list or a digit string ('100000').  A trailing 'e'
    pads the generator with zeros up to the full pairwise width, so
    '1e' on (Z/2)^4 means the first basis element.
    """
    if not text:
        return []
    gens = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        pad = chunk.endswith("e")
        body = chunk[:-1] if pad else chunk
        try:
            vec = [int(x) for x in body.split(",")] if "," in body else [int(c) for c in body]
        except ValueError:
            raise InvalidInput(f"cannot read Amitsur generator {chunk!r}") from None
        if pad and len(vec) < width:
            vec += [0] * (width - len(vec))
        if len(vec) != width:
            raise InvalidInput(f"Amitsur generator {chunk!r} has {len(vec)} entries, expected {width}")
        gens.append(vec)
    return gens


def cmd_schur(args) -> int:
    orders = _parse_orders(args.orders)
    group = GroupSpec(args.name or "x".join(f"C{n}" for n in orders), orders)
    basis = schur_basis(group)
    gens = _parse_am(args.am, len(basis))
    result = brauer_from_amitsur(group, gens)
    if args.json:
        _print_json({
            "group": list(orders),
            "schur_basis": [{"pair": [i + 1, j + 1], "order": d} for i, j, d in basis],
            "amitsur_generators": gens,
            "result": result.to_list(),
        })
    else:
        print(str(result))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eqbrauer", description="Brauer groups of quotient stacks and symbol residues.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="solve one stratification case")
    c.add_argument("case")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify-catalog", help="verify every shipped catalog entry")
    v.add_argument("--filter", help="label glob, e.g. '2.G*'")
    v.add_argument("--oracle-cap", type=int, default=DEFAULT_ORACLE_CAP, help="largest state space for the brute-force oracle")
    v.add_argument("--catalog", help="directory with catalog/ and scenarios/ (default: shipped data)")
    v.add_argument("--json", action="store_true")
    v.add_argument("--no-timing", action="store_true", help="omit wall times from JSON output")
    v.set_defaults(func=cmd_verify_catalog)

    r = sub.add_parser("residue", help="residue report for a symbol scenario")
    r.add_argument("scenario")
    r.add_argument("--json", action="store_true")
    r.add_argument("--allow-unknown", action="store_true", help="do not fail on uncertified square classes")
    r.set_defaults(func=cmd_residue)

    s = sub.add_parser("schur", help="Schur multiplier modulo Amitsur generators")
    s.add_argument("--orders", required=True, help="cyclic orders, e.g. 2,2,2,2")
    s.add_argument("--am", help="generators in the pairwise basis, ';'-separated, e.g. '100000;010000'")
    s.add_argument("--name")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_schur)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, ResidueError, ParseError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
