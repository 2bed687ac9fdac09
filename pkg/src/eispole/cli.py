"""Command-line front end.

    eispole --type G2 --node 2 --format text
    eispole --type E6 --node ALL --verify --format json
    eispole --sweep
    eispole --corpus path/to/golden.json

Exit codes: 0 success, 1 verification/comparison failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import golden as golden_mod
from .parabolic import graded_eigenvalues, parabolic_data
from .polemap import (
    format_pole_table,
    format_pole_table_latex,
    pole_polynomial,
)
from .residue_oracle import cross_check, report_to_json
from .rootsys import (
    ConfigurationError,
    DEFAULT_MAX_RANK,
    RootSystemKind,
    build_root_system,
    iter_kinds,
)
from .sl2decomp import decompose

DEFAULT_WEYL_CAP = 51840


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="eispole",
        description=(
            "Pole locations and orders of unramified degenerate "
            "Eisenstein series for maximal parabolic subgroups, by exact "
            "root-system combinatorics."
        ),
    )
    p.add_argument("--type", dest="kind", help="root system, e.g. A3, E8, G2")
    p.add_argument(
        "--node", default="ALL", help="simple-root node index, or ALL"
    )
    p.add_argument(
        "--format",
        dest="fmt",
        choices=("text", "json", "latex"),
        default="text",
    )
    p.add_argument(
        "--rescale",
        default="1",
        help="divide reported pole locations by this positive rational p/q",
    )
    p.add_argument(
        "--verify",
        action="store_true",
        help="cross-check each result against the residue function",
    )
    p.add_argument(
        "--sweep",
        action="store_true",
        help="verify every maximal parabolic of every kind up to rank 8",
    )
    p.add_argument(
        "--corpus",
        metavar="PATH",
        help="compare against a golden corpus file and report",
    )
    p.add_argument(
        "--weyl-cap",
        type=int,
        default=DEFAULT_WEYL_CAP,
        help="largest |W| allowed in Weyl-group sweeps",
    )
    return p


def _case_report(kind: RootSystemKind, node: int, verify: bool) -> dict:
    rs = build_root_system(kind)
    pd = parabolic_data(rs, node)
    ge = graded_eigenvalues(pd)
    dec = {j: decompose(vals) for j, vals in ge.levels}
    pp = pole_polynomial(dec)
    report = {
        "type": str(kind),
        "rank": kind.rank,
        "node": node,
        "levels": [
            {
                "j": j,
                "dim": len(vals),
                "eigenvalues": list(vals),
                "sl2": [{"l": l, "mult": m} for l, m in dec[j].mults],
            }
            for j, vals in ge.levels
        ],
        "poles": [{"s": str(s0), "order": m} for s0, m in pp.zeros],
    }
    if verify:
        report["oracle"] = report_to_json(cross_check(pd))["oracle"]
    return report


def _format_text(report: dict, rescale: Fraction) -> str:
    parts = []
    for lvl in report["levels"]:
        summands = []
        for item in lvl["sl2"]:
            v = f"V{item['l']}"
            if item["mult"] > 1:
                v += f"^{item['mult']}"
            summands.append(v)
        parts.append(f"r{lvl['j']} = " + (" + ".join(summands) or "0"))
    entries = [
        (Fraction(p["s"]) / rescale, p["order"]) for p in report["poles"]
    ]
    line = (
        f"{report['type']} node {report['node']}: "
        + ", ".join(parts)
        + "; poles: "
        + format_pole_table(entries)
    )
    if "oracle" in report:
        verdict = "ok" if report["oracle"]["match"] else "MISMATCH"
        line += f"; oracle: {verdict}"
    return line


def dumps_canonical(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    try:
        rescale = Fraction(args.rescale)
        if rescale <= 0:
            raise ValueError
    except (ValueError, ZeroDivisionError):
        parser.error(f"--rescale must be a positive rational, got {args.rescale!r}")

    if args.corpus is not None:
        return _run_corpus(args)
    if args.sweep:
        return _run_sweep(args)
    if args.kind is None:
        parser.error("--type is required unless --sweep or --corpus is given")

    try:
        kind = RootSystemKind.parse(args.kind)
        build_root_system(kind)
    except ConfigurationError as exc:
        parser.error(str(exc))

    if args.node.upper() == "ALL":
        nodes = list(range(1, kind.rank + 1))
    else:
        try:
            node = int(args.node)
        except ValueError:
            parser.error(f"--node must be an integer or ALL, got {args.node!r}")
        if not 1 <= node <= kind.rank:
            parser.error(f"node {node} out of range 1..{kind.rank}")
        nodes = [node]

    reports = [_case_report(kind, n, args.verify) for n in nodes]
    status = 0
    if args.verify and any(not r["oracle"]["match"] for r in reports):
        status = 1

    if args.fmt == "json":
        payload = reports[0] if len(reports) == 1 else {"results": reports}
        print(dumps_canonical(payload))
    elif args.fmt == "latex":
        for r in reports:
            entries = [
                (Fraction(p["s"]) / rescale, p["order"]) for p in r["poles"]
            ]
            print(format_pole_table_latex(entries))
    else:
        for r in reports:
            print(_format_text(r, rescale))
    return status


def _run_sweep(args) -> int:
    failures = []
    total = 0
    for kind in iter_kinds(DEFAULT_MAX_RANK):
        rs = build_root_system(kind)
        for node in range(1, kind.rank + 1):
            total += 1
            report = cross_check(parabolic_data(rs, node))
            if not report["match"]:
                failures.append((str(kind), node, report))
    summary = {
        "sweep": {"cases": total, "failures": len(failures)},
    }
    if failures:
        summary["sweep"]["detail"] = [
            {"type": k, "node": n} for k, n, _ in failures
        ]
    print(dumps_canonical(summary))
    return 1 if failures else 0


def _run_corpus(args) -> int:
    try:
        report = golden_mod.golden_compare(args.corpus)
    except golden_mod.CorpusError as exc:
        print(f"corpus error: {exc}", file=sys.stderr)
        return 1
    printable = {
        "corpus": {
            "cases": report["cases"],
            "match": report["match"],
            "mismatches": [
                {
                    "type": m["type"],
                    "node": m["node"],
                    "oracle_match": m["oracle"]["match"],
                    "source": m["source"],
                }
                for m in report["mismatches"]
            ],
        }
    }
    if "warning" in report:
        printable["corpus"]["warning"] = report["warning"]
    print(dumps_canonical(printable))
    return 0 if report["match"] else 1


if __name__ == "__main__":
    sys.exit(main())
