"""Parameter-grid census sweep over the two-parameter family.

Each grid point records the 2x2 sub-CHM count, the Gram residual, whether
a block pairing was found, and whether the count lands in the impossible
range for block-reducible matrices. Output is written in deterministic
grid order regardless of worker count.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .census import census_2x2, forbidden_count_check, h2_block_structure
from .core import DEFAULT_TOL, Tolerance, gram_residual
from .families import FamilyPoint, family_h

CSV_HEADER = "x1,x2,N,gram_residual,h2_found,forbidden"


@dataclass(frozen=True)
class ScanConfig:
    grid_n: int
    out_path: str | Path
    tol: Tolerance = DEFAULT_TOL
    fmt: str = "csv"
    workers: int = 1

    def __post_init__(self):
        if self.grid_n < 2:
            raise ValueError("grid_n must be at least 2")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"format must be csv or json, got {self.fmt!r}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


@dataclass(frozen=True)
class CensusRecord:
    x1: float
    x2: float
    n: int
    gram_residual: float
    h2_found: bool
    forbidden: bool

    def to_obj(self) -> dict:
        return {
            "x1": self.x1,
            "x2": self.x2,
            "N": self.n,
            "gramResidual": self.gram_residual,
            "h2Found": self.h2_found,
            "forbidden": self.forbidden,
        }


def grid_values(grid_n: int) -> list[float]:
    """Samples -pi/2 + k*pi/grid_n for k = 1..grid_n (the half-open domain)."""
    return [-math.pi / 2 + k * math.pi / grid_n for k in range(1, grid_n + 1)]


def scan_point(x1: float, x2: float, eps: float = DEFAULT_TOL.eps) -> CensusRecord:
    """Census record for one family point."""
    tol = Tolerance(eps)
    M = family_h(FamilyPoint(x1, x2))
    n = census_2x2(M, tol).count
    return CensusRecord(
        x1=x1,
        x2=x2,
        n=n,
        gram_residual=gram_residual(M),
        h2_found=h2_block_structure(M, tol) is not None,
        forbidden=not forbidden_count_check(n),
    )


def _scan_star(args) -> CensusRecord:
    return scan_point(*args)


def run_scan(config: ScanConfig) -> tuple[list[CensusRecord], dict]:
    """All grid records in row-major (k1, k2) order, plus the summary."""
    xs = grid_values(config.grid_n)
    points = [(x1, x2, config.tol.eps) for x1 in xs for x2 in xs]
    if config.workers > 1:
        chunk = max(1, len(points) // (4 * config.workers))
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            records = list(pool.map(_scan_star, points, chunksize=chunk))
    else:
        records = [scan_point(*p) for p in points]
    counts = [r.n for r in records]
    summary = {
        "points": len(records),
        "minN": min(counts),
        "maxN": max(counts),
        "forbiddenCount": sum(r.forbidden for r in records),
    }
    return records, summary


def write_records(records, summary, config: ScanConfig) -> None:
    """Write the scan output file (CSV rows or a JSON document), LF-terminated."""
    path = Path(config.out_path)
    if config.fmt == "csv":
        lines = [CSV_HEADER]
        for r in records:
            lines.append(
                f"{r.x1:.12g},{r.x2:.12g},{r.n},{r.gram_residual:.12g},"
                f"{str(r.h2_found).lower()},{str(r.forbidden).lower()}"
            )
        path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
    else:
        from .core import json_dumps

        doc = {"records": [r.to_obj() for r in records], "summary": summary}
        path.write_text(json_dumps(doc) + "\n", encoding="utf-8", newline="\n")


def summary_line(summary: dict) -> str:
    return (
        f"points={summary['points']} minN={summary['minN']} "
        f"maxN={summary['maxN']} forbidden={summary['forbiddenCount']}"
    )
