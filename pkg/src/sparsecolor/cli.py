"""Command-line driver: ``sparsecolor {color,verify,bench}``.

Every command reads coordinate Matrix Market files. ``color`` prints the
color counts of one run, ``verify`` also runs the matching oracle, and
``bench`` repeats ordering and coloring and keeps the fastest time. The exit
status is 0 unless a file fails to parse, a mode does not apply to a matrix,
or a verification fails.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from .api import MODES, build_graph, color_graph, verify_result
from .mmio import MatrixMarketError, read_mtx
from .orderings import ORDERINGS
from .pattern import PatternError

__all__ = ["main", "build_parser", "color_report"]

_PREFER = {"rows": "rows", "columns": "columns", "first": "first"}
REPORT_KEYS = (
    "matrix", "m", "n", "nnz", "mode", "order", "seed", "num_colors",
    "num_row_colors", "num_col_colors", "t_order_ns", "t_color_ns", "verified",
)


def _order_name(s):
    return s.replace("-", "_")


def color_report(path, mode, order="natural", *, seed=0, prefer="first", verify=False,
                 repeat=1, include_colors=False):
    """Color one file and describe the run as a flat dict.

    Times are the minimum over ``repeat`` runs and exclude parsing and graph
    construction.
    """
    pattern, _ = read_mtx(path)
    graph = build_graph(pattern, mode)
    best = None
    for _ in range(max(1, int(repeat))):
        result = color_graph(pattern, graph, mode, order, seed=seed, prefer=prefer)
        if best is None:
            best = dict(result.timings)
        else:
            for key, value in result.timings.items():
                best[key] = min(best[key], value)
    verified = None
    if verify:
        violation = verify_result(result, rng=seed)
        verified = violation is None
    report = {
        "matrix": Path(path).stem,
        "m": pattern.n_rows,
        "n": pattern.n_cols,
        "nnz": pattern.nnz,
        "mode": result.mode,
        "order": _order_name(order),
        "seed": seed,
        "num_colors": result.num_colors,
        "num_row_colors": result.num_row_colors,
        "num_col_colors": result.num_col_colors,
        "t_order_ns": best["order"],
        "t_color_ns": best["color"],
        "verified": verified,
    }
    if verify and not verified:
        report["violation"] = str(violation)
    if include_colors:
        if result.bicoloring is not None:
            report["row_colors"] = result.bicoloring.row_colors.tolist()
            report["col_colors"] = result.bicoloring.col_colors.tolist()
        else:
            report["colors"] = result.coloring.color.tolist()
    return report


def _add_common(p, *, many_modes=False):
    if many_modes:
        p.add_argument("--mode", action="append", choices=MODES,
                       help="coloring mode; repeat to bench several (default: star-bicoloring)")
        p.add_argument("--order", action="append", type=_order_name,
                       choices=ORDERINGS, help="vertex ordering; repeatable (default: natural)")
    else:
        p.add_argument("--mode", choices=MODES, default="star-bicoloring")
        p.add_argument("--order", type=_order_name, choices=ORDERINGS, default="natural")
    p.add_argument("--seed", type=int, default=0, help="seed of the random ordering")
    p.add_argument("--prefer-neutral", choices=sorted(_PREFER), default="first",
                   help="bicoloring tie-break: which side to neutralize first")
    p.add_argument("--json", action="store_true", help="print JSON instead of text")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sparsecolor",
        description="Color sparse matrices stored in Matrix Market files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("color", help="color one matrix")
    p.add_argument("path")
    _add_common(p)
    p.add_argument("--verify", action="store_true", help="check the coloring with its oracle")
    p.add_argument("--colors", action="store_true", help="include per-vertex colors in JSON")

    p = sub.add_parser("verify", help="color one or more matrices and check every result")
    p.add_argument("paths", nargs="+")
    _add_common(p)

    p = sub.add_parser("bench", help="time ordering and coloring")
    p.add_argument("paths", nargs="+")
    _add_common(p, many_modes=True)
    p.add_argument("--repeat", type=int, default=5, help="runs per case; the minimum is kept")
    p.add_argument("--verify", action="store_true")
    p.add_argument("--csv", action="store_true", help="print CSV instead of text")
    return parser


def _text(report):
    counts = f"{report['num_colors']} colors"
    if report["mode"] in ("row", "column") or "bicoloring" in report["mode"]:
        counts += f" (rows {report['num_row_colors']}, columns {report['num_col_colors']})"
    line = (f"{report['matrix']} {report['m']}x{report['n']} nnz={report['nnz']} "
            f"{report['mode']}/{report['order']}: {counts}, "
            f"order {report['t_order_ns'] / 1e6:.3f} ms, color {report['t_color_ns'] / 1e6:.3f} ms")
    if report["verified"] is not None:
        line += ", verified" if report["verified"] else f", FAILED ({report.get('violation')})"
    return line


def _error(msg):
    print(f"sparsecolor: error: {msg}", file=sys.stderr)


def main(argv=None):
    args = build_parser().parse_args(argv)
    prefer = _PREFER[args.prefer_neutral]
    status = 0

    if args.command == "color":
        cases = [(args.path, args.mode, args.order)]
        verify, repeat = args.verify, 1
    elif args.command == "verify":
        cases = [(p, args.mode, args.order) for p in args.paths]
        verify, repeat = True, 1
    else:
        modes = args.mode or ["star-bicoloring"]
        orders = args.order or ["natural"]
        cases = [(p, m, o) for p in args.paths for m in modes for o in orders]
        verify, repeat = args.verify, args.repeat

    reports = []
    for path, mode, order in cases:
        try:
            report = color_report(path, mode, order, seed=args.seed, prefer=prefer,
                                  verify=verify, repeat=repeat,
                                  include_colors=getattr(args, "colors", False))
        except (OSError, MatrixMarketError, PatternError) as exc:
            _error(str(exc))
            status = 1
            continue
        if report["verified"] is False:
            status = 1
        reports.append(report)

    if getattr(args, "csv", False):
        writer = csv.DictWriter(sys.stdout, fieldnames=REPORT_KEYS, extrasaction="ignore")
        writer.writeheader()
        writer.writerows(reports)
    elif args.json:
        out = reports[0] if args.command == "color" and reports else reports
        if args.command != "color" or reports:
            print(json.dumps(out, indent=2))
    else:
        for report in reports:
            print(_text(report))
    return status


if __name__ == "__main__":
    sys.exit(main())
