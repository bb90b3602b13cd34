"""Command-line entry point: ``saxl group``, ``saxl suite``, ``saxl catalog``, ``saxl edges``."""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace

from .bases import DEFAULT_CONFIG, base_size, format_edge_dump, minimal_bases
from .constructions import CATALOG
from .errors import BudgetExceeded, ManifestError, ParseError, SaxlError
from .report import build_group, dumps_report, format_suite, parse_checks, parse_spec, run_report, run_suite

EXIT_OK, EXIT_FAIL, EXIT_BUDGET, EXIT_INPUT = 0, 1, 2, 3


def _cfg(args):
    cfg = DEFAULT_CONFIG
    if args.max_edges is not None:
        cfg = replace(cfg, max_edges=args.max_edges)
    if args.time_budget is not None:
        cfg = replace(cfg, time_budget=args.time_budget)
    return cfg


def _write(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_group(args) -> int:
    spec = parse_spec(args.spec)
    checks, gossip_n = parse_checks(args.checks)
    rep = run_report(spec, checks, _cfg(args), gossip_n, timings=args.timings)
    _write(dumps_report(rep), args.out)
    return EXIT_BUDGET if rep["budget_exhausted"] else EXIT_OK


def cmd_suite(args) -> int:
    cfg = _cfg(args) if (args.max_edges or args.time_budget) else None
    code, rows = run_suite(args.manifest, cfg, workers=args.workers)
    print(format_suite(rows))
    if args.out:
        import json

        with open(args.out, "w", encoding="utf-8") as fh:
            json.dump([r.report for r in rows], fh, indent=2)
            fh.write("\n")
    return code


def cmd_catalog(args) -> int:
    for name, entry in CATALOG.items():
        print(f"{name:12s} degree {entry.degree:4d}  order {entry.order:8d}  {entry.description}")
    return EXIT_OK


def cmd_edges(args) -> int:
    G = build_group(parse_spec(args.spec))
    cfg = _cfg(args)
    b = base_size(G, cfg)
    edges = minimal_bases(G, cfg, b)
    _write(format_edge_dump(G.degree, b, edges), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="saxl", description="Base sizes and Saxl hypergraphs of permutation groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    def budget(p):
        p.add_argument("--max-edges", type=int, default=None, help="cap on enumerated edges")
        p.add_argument("--time-budget", type=float, default=None, help="wall-clock cap in seconds")

    g = sub.add_parser("group", help="report on one group")
    g.add_argument("spec", help='group spec, e.g. "PGL2:7", "AFFDEL:5:1", "CAT:M11"')
    g.add_argument("--checks", default=None, help="comma list: complete,valency,cnc,edcnc,gossip=N,flagtour,rays,structure")
    g.add_argument("--out", default=None)
    g.add_argument("--timings", action="store_true", help="include per-check wall-clock times")
    budget(g)
    g.set_defaults(func=cmd_group)

    s = sub.add_parser("suite", help="run a manifest of groups and expectations")
    s.add_argument("manifest")
    s.add_argument("--out", default=None, help="write all reports as a JSON list")
    s.add_argument("--workers", type=int, default=1)
    budget(s)
    s.set_defaults(func=cmd_suite)

    c = sub.add_parser("catalog", help="list named groups")
    c.set_defaults(func=cmd_catalog)

    e = sub.add_parser("edges", help="dump the minimum bases of a group")
    e.add_argument("spec")
    e.add_argument("--out", default=None)
    budget(e)
    e.set_defaults(func=cmd_edges)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ParseError, ManifestError, ValueError, OSError, SaxlError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
