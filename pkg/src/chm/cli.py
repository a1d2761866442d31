"""Command-line surface.

Matrix arguments accept a registry name (`M1`), a family point
(`family:1.0,0.5`), or a JSON file (`@matrix.json`). Exit codes:
0 success/affirmative, 1 negative verdict, 2 unknown name, 3 invalid
matrix or parameters, 4 search timeout, 5 I/O error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .census import census_2x2, find_3x3_sub_chms, h2_block_structure
from .core import (
    DEFAULT_EPS,
    Tolerance,
    json_dumps,
    matrix_from_obj,
    matrix_to_obj,
)
from .equivalence import are_equivalent, count_real_entries, dephase
from .errors import ChmError, SearchTimeoutError, UnknownNameError
from .families import FamilyPoint, family_h, named, registry_entries
from .mub import exclusion_report, mu_pair
from .scan import ScanConfig, run_scan, summary_line, write_records

EXIT_NEGATIVE = 1
EXIT_UNKNOWN_NAME = 2
EXIT_INVALID = 3
EXIT_TIMEOUT = 4
EXIT_IO = 5


def _default_eps() -> float:
    return float(os.environ.get("CHM_TOL", DEFAULT_EPS))


def _tol(args) -> Tolerance:
    return Tolerance(args.tol if args.tol is not None else _default_eps())


def _resolve_matrix(arg: str):
    """Turn a matrix argument into an array (name, family point, or @file)."""
    if arg.startswith("@"):
        with open(arg[1:], encoding="utf-8") as fh:
            return matrix_from_obj(json.load(fh))
    if arg.startswith("family:"):
        parts = arg[len("family:") :].split(",")
        if len(parts) != 2:
            raise ValueError(f"expected family:x1,x2, got {arg!r}")
        return family_h(FamilyPoint(float(parts[0]), float(parts[1])))
    return named(arg).matrix


def _emit(obj) -> None:
    print(json_dumps(obj))


def _cmd_show(args) -> int:
    _emit(matrix_to_obj(named(args.name).matrix))
    return 0


def _cmd_registry(args) -> int:
    _emit([{"name": e.name, "provenance": e.provenance} for e in registry_entries()])
    return 0


def _cmd_census(args) -> int:
    result = census_2x2(_resolve_matrix(args.matrix), _tol(args))
    _emit(result.to_obj())
    return 0


def _cmd_census3(args) -> int:
    locs = find_3x3_sub_chms(_resolve_matrix(args.matrix), _tol(args))
    _emit({"count": len(locs), "locations": [loc.to_obj() for loc in locs]})
    return 0


def _cmd_h2(args) -> int:
    structure = h2_block_structure(_resolve_matrix(args.matrix), _tol(args))
    if structure is None:
        _emit({"found": False})
        return EXIT_NEGATIVE
    _emit({"found": True, **structure.to_obj()})
    return 0


def _cmd_equiv(args) -> int:
    witness = are_equivalent(
        _resolve_matrix(args.a), _resolve_matrix(args.b), _tol(args), timeout=args.timeout
    )
    if witness is None:
        print("inequivalent")
        return EXIT_NEGATIVE
    _emit(witness.to_obj())
    return 0


def _cmd_mu(args) -> int:
    verdict = mu_pair(_resolve_matrix(args.f), _resolve_matrix(args.g), _tol(args))
    _emit(verdict.to_obj())
    return 0 if verdict.ok else EXIT_NEGATIVE


def _cmd_exclusions(args) -> int:
    report = exclusion_report(_resolve_matrix(args.matrix), _tol(args))
    _emit(report.to_obj())
    return 0


def _cmd_dephase(args) -> int:
    _emit(matrix_to_obj(dephase(_resolve_matrix(args.matrix))))
    return 0


def _cmd_real(args) -> int:
    _emit({"count": count_real_entries(_resolve_matrix(args.matrix), _tol(args))})
    return 0


def _cmd_scan(args) -> int:
    config = ScanConfig(
        grid_n=args.grid,
        out_path=args.out,
        tol=_tol(args),
        fmt=args.format,
        workers=args.workers,
    )
    records, summary = run_scan(config)
    write_records(records, summary, config)
    print(summary_line(summary))
    return 0


def _add_tol(parser) -> None:
    parser.add_argument(
        "--tol",
        type=float,
        default=None,
        help="absolute tolerance (default 1e-9, or the CHM_TOL env var)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chm",
        description="Structure checks and censuses for 6x6 complex Hadamard matrices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("show", help="print a registry matrix as JSON")
    p.add_argument("name")
    p.set_defaults(func=_cmd_show)

    p = sub.add_parser("registry", help="list registry matrices")
    p.add_argument("action", nargs="?", default="list", choices=["list"])
    p.set_defaults(func=_cmd_registry)

    p = sub.add_parser("census", help="count 2x2 sub-CHM submatrices")
    p.add_argument("matrix")
    _add_tol(p)
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("census3", help="locate 3x3 sub-CHM submatrices")
    p.add_argument("matrix")
    _add_tol(p)
    p.set_defaults(func=_cmd_census3)

    p = sub.add_parser("h2", help="find a 2x2 block pairing structure")
    p.add_argument("matrix")
    _add_tol(p)
    p.set_defaults(func=_cmd_h2)

    p = sub.add_parser("equiv", help="search for a complex-equivalence witness")
    p.add_argument("a")
    p.add_argument("b")
    _add_tol(p)
    p.add_argument("--timeout", type=float, default=120.0, help="search budget in seconds")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("mu", help="check mutual unbiasedness of two bases")
    p.add_argument("f")
    p.add_argument("g")
    _add_tol(p)
    p.set_defaults(func=_cmd_mu)

    p = sub.add_parser("exclusions", help="evaluate trio-exclusion rules")
    p.add_argument("matrix")
    _add_tol(p)
    p.set_defaults(func=_cmd_exclusions)

    p = sub.add_parser("dephase", help="print the dephased form")
    p.add_argument("matrix")
    _add_tol(p)
    p.set_defaults(func=_cmd_dephase)

    p = sub.add_parser("real", help="count real entries")
    p.add_argument("matrix")
    _add_tol(p)
    p.set_defaults(func=_cmd_real)

    p = sub.add_parser("scan", help="grid sweep of the family census")
    p.add_argument("--grid", type=int, required=True, help="points per axis (>= 2)")
    p.add_argument("--out", required=True, help="output file path")
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--workers", type=int, default=1)
    _add_tol(p)
    p.set_defaults(func=_cmd_scan)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UnknownNameError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN_NAME
    except SearchTimeoutError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TIMEOUT
    except (ChmError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
