"""Complex matrix primitives: unimodularity and Hadamard checks, JSON I/O.

Matrices are numpy complex128 arrays internally. All user-facing indices
(JSON, location reports, witnesses) are 1-based, like the h_jk convention
for matrix entries; row/column 1 is the top-left.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidMatrixError, NonSquareError

DEFAULT_EPS = 1e-9


@dataclass(frozen=True)
class Tolerance:
    """Absolute tolerance on entry moduli and orthogonality residuals."""

    eps: float = DEFAULT_EPS

    def __post_init__(self):
        if not 0.0 < self.eps < 1e-3:
            raise ValueError(f"eps must lie in (0, 1e-3), got {self.eps!r}")


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class CheckResult:
    """Verdict of a tolerance check; ok iff residual <= eps of the tolerance used."""

    ok: bool
    residual: float


def as_matrix(entries) -> np.ndarray:
    """Coerce input to a square complex128 array with finite entries."""
    m = np.asarray(entries, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NonSquareError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] == 0:
        raise InvalidMatrixError("matrix must be non-empty")
    if not np.isfinite(m).all():
        raise InvalidMatrixError("matrix entries must be finite")
    return m


def is_unimodular(z, tol: Tolerance = DEFAULT_TOL) -> CheckResult:
    """Check |z| == 1 within tolerance; residual is | |z| - 1 |."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidMatrixError("value must be finite")
    residual = abs(abs(z) - 1.0)
    return CheckResult(residual <= tol.eps, residual)


def unimodularity_residual(M) -> float:
    """Largest | |entry| - 1 | over the matrix."""
    M = as_matrix(M)
    return float(np.abs(np.abs(M) - 1.0).max())


def gram_residual(M) -> float:
    """Largest deviation of M M* from d times the identity, entrywise."""
    M = as_matrix(M)
    d = M.shape[0]
    G = M @ M.conj().T
    G[np.diag_indices(d)] -= d
    return float(np.abs(G).max())


def is_chm(M, tol: Tolerance = DEFAULT_TOL) -> CheckResult:
    """Check that M is a complex Hadamard matrix: unimodular entries, M M* = d I.

    The Gram deviation is compared against eps*d (it sums d unimodular
    terms per entry), so the stored residual is max(entry residual,
    gram residual / d), keeping ok <=> residual <= eps.
    """
    M = as_matrix(M)
    d = M.shape[0]
    residual = max(unimodularity_residual(M), gram_residual(M) / d)
    return CheckResult(residual <= tol.eps, residual)


# --- JSON wire format -------------------------------------------------------
#
# {"d": 6, "entries": [[{"re": r, "im": i}, ... d], ... d]}


def _entry_from_obj(e) -> complex:
    if not isinstance(e, dict) or set(e) != {"re", "im"}:
        raise InvalidMatrixError("matrix entry must be an object with re/im")
    re, im = e["re"], e["im"]
    if isinstance(re, bool) or isinstance(im, bool):
        raise InvalidMatrixError("matrix entry components must be numbers")
    if not isinstance(re, (int, float)) or not isinstance(im, (int, float)):
        raise InvalidMatrixError("matrix entry components must be numbers")
    if not (math.isfinite(re) and math.isfinite(im)):
        raise InvalidMatrixError("matrix entry components must be finite")
    return complex(re, im)


def matrix_from_obj(obj) -> np.ndarray:
    """Parse the JSON object form of a matrix, rejecting non-square/non-finite input."""
    if not isinstance(obj, dict) or "d" not in obj or "entries" not in obj:
        raise InvalidMatrixError("matrix object must have d and entries")
    d = obj["d"]
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise InvalidMatrixError("d must be a positive integer")
    rows = obj["entries"]
    if not isinstance(rows, list) or len(rows) != d:
        raise NonSquareError(f"expected {d} rows, got {len(rows) if isinstance(rows, list) else 'non-list'}")
    out = np.empty((d, d), dtype=np.complex128)
    for j, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != d:
            raise NonSquareError(f"row {j + 1} does not have {d} entries")
        for k, e in enumerate(row):
            out[j, k] = _entry_from_obj(e)
    return out


def matrix_to_obj(M) -> dict:
    """JSON object form of a matrix."""
    M = as_matrix(M)
    return {
        "d": int(M.shape[0]),
        "entries": [
            [{"re": float(z.real), "im": float(z.imag)} for z in row] for row in M
        ],
    }


def loads_matrix(text: str) -> np.ndarray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidMatrixError(f"invalid JSON: {exc}") from exc
    return matrix_from_obj(obj)


# --- deterministic output formatting ----------------------------------------


def round12(x: float) -> float:
    """Round to 12 significant digits (the fixed CLI output precision)."""
    return float(f"{float(x):.12g}")


def rounded(obj):
    """Recursively round every float in a JSON-style structure to 12 digits."""
    if isinstance(obj, float):
        return round12(obj)
    if isinstance(obj, dict):
        return {k: rounded(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [rounded(v) for v in obj]
    return obj


def json_dumps(obj) -> str:
    """Deterministic JSON text: 12-digit floats, UTF-8 friendly, no locale."""
    return json.dumps(rounded(obj), indent=2, ensure_ascii=False)
