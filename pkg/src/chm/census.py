"""Sub-CHM censuses: 2x2 and 3x3 submatrix enumeration, block pairings.

A 2x2 submatrix [a b; c d] with unimodular entries is proportional to a
Hadamard matrix exactly when a*d + b*c = 0. The 6x6 censuses enumerate
all C(6,2)^2 = 225 and C(6,3)^2 = 400 submatrices in lexicographic order
(row sets outer, column sets inner), which fixes the reported ordering.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_TOL, CheckResult, Tolerance, as_matrix, is_chm
from .errors import (
    DimensionMismatchError,
    NotCHMError,
    NotUnimodularError,
    OracleDisagreementError,
)

_PAIRS = list(itertools.combinations(range(6), 2))  # 15 index pairs
_TRIPLES = list(itertools.combinations(range(6), 3))  # 20 index triples

_R1 = np.array([p[0] for p in _PAIRS])
_R2 = np.array([p[1] for p in _PAIRS])

FORBIDDEN_COUNTS = frozenset({10, 11, 12, 13, 14, 15, 16, 18})


def _perfect_matchings(elems):
    """All ways to split elems into unordered pairs, lexicographic order."""
    if not elems:
        return [()]
    first, rest = elems[0], list(elems[1:])
    out = []
    for i, partner in enumerate(rest):
        remaining = rest[:i] + rest[i + 1 :]
        for sub in _perfect_matchings(remaining):
            out.append(((first, partner),) + sub)
    return out


_PAIRINGS = _perfect_matchings((0, 1, 2, 3, 4, 5))  # 15 pairings


@dataclass(frozen=True)
class SubmatrixLoc:
    """Sorted 1-based row and column index sets naming a submatrix."""

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        for idx in (self.rows, self.cols):
            if list(idx) != sorted(set(idx)) or idx[0] < 1 or idx[-1] > 6:
                raise ValueError(f"indices must be strictly increasing within 1..6: {idx}")

    def to_obj(self) -> dict:
        return {"rows": list(self.rows), "cols": list(self.cols)}


@dataclass(frozen=True)
class CensusResult:
    count: int
    locations: tuple[SubmatrixLoc, ...]

    def __post_init__(self):
        if self.count != len(self.locations):
            raise ValueError("count must equal the number of locations")

    def to_obj(self) -> dict:
        return {"count": self.count, "locations": [loc.to_obj() for loc in self.locations]}


@dataclass(frozen=True)
class H2Structure:
    """Row and column pairings (1-based) under which all nine blocks are sub-CHMs."""

    row_pairing: tuple[tuple[int, int], ...]
    col_pairing: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for pairing in (self.row_pairing, self.col_pairing):
            seen = [i for pair in pairing for i in pair]
            if sorted(seen) != [1, 2, 3, 4, 5, 6]:
                raise ValueError(f"not a perfect pairing of 1..6: {pairing}")

    def to_obj(self) -> dict:
        return {
            "rowPairing": [list(p) for p in self.row_pairing],
            "colPairing": [list(p) for p in self.col_pairing],
        }


def is_sub_chm_2x2(a, b, c, d, tol: Tolerance = DEFAULT_TOL) -> CheckResult:
    """Check whether [a b; c d] with unimodular entries is a scaled 2x2 CHM.

    Primary predicate: |a*d + b*c| <= eps. The equivalent row-orthogonality
    form |a*conj(c) + b*conj(d)| is computed as a cross-check; on unimodular
    inputs the two residuals agree exactly, so disagreement beyond 10*eps
    signals corrupted input or a numeric fault.
    """
    vals = []
    for v in (a, b, c, d):
        v = complex(v)
        if abs(abs(v) - 1.0) > tol.eps:
            raise NotUnimodularError(f"entry {v!r} is not unimodular")
        vals.append(v)
    a, b, c, d = vals
    residual = abs(a * d + b * c)
    alt = abs(a * c.conjugate() + b * d.conjugate())
    if abs(residual - alt) > 10 * tol.eps:
        raise OracleDisagreementError(
            f"2x2 predicates disagree: {residual:.3g} vs {alt:.3g}"
        )
    return CheckResult(residual <= tol.eps, residual)


def _pair_residuals(M):
    # Residuals |ad + bc| for all 225 2x2 submatrices at once, plus the
    # cross-check |a conj(c) + b conj(d)|; index [p, q] is row pair p, col pair q.
    a = M[_R1[:, None], _R1[None, :]]
    b = M[_R1[:, None], _R2[None, :]]
    c = M[_R2[:, None], _R1[None, :]]
    d = M[_R2[:, None], _R2[None, :]]
    residual = np.abs(a * d + b * c)
    alt = np.abs(a * np.conj(c) + b * np.conj(d))
    return residual, alt


def census_2x2(M, tol: Tolerance = DEFAULT_TOL) -> CensusResult:
    """Count and locate the 2x2 sub-CHMs among the 225 submatrices of a 6x6 CHM."""
    M = as_matrix(M)
    if M.shape != (6, 6):
        raise DimensionMismatchError(f"expected a 6x6 matrix, got {M.shape}")
    check = is_chm(M, tol)
    if not check.ok:
        raise NotCHMError(f"census requires a CHM (residual {check.residual:.3g})")
    residual, alt = _pair_residuals(M)
    worst = float(np.abs(residual - alt).max())
    if worst > 10 * tol.eps:
        raise OracleDisagreementError(f"2x2 predicates disagree by {worst:.3g}")
    hits = residual <= tol.eps
    locations = []
    for p, (r1, r2) in enumerate(_PAIRS):
        for q, (c1, c2) in enumerate(_PAIRS):
            if hits[p, q]:
                locations.append(SubmatrixLoc(rows=(r1 + 1, r2 + 1), cols=(c1 + 1, c2 + 1)))
    return CensusResult(count=len(locations), locations=tuple(locations))


def find_3x3_sub_chms(M, tol: Tolerance = DEFAULT_TOL) -> list[SubmatrixLoc]:
    """Locate 3x3 submatrices with pairwise orthogonal rows among the 400 choices.

    Each of the three row inner products must have modulus <= 3*eps (sums
    of three unimodular terms). Such a submatrix is itself a 3x3 CHM.
    """
    M = as_matrix(M)
    if M.shape != (6, 6):
        raise DimensionMismatchError(f"expected a 6x6 matrix, got {M.shape}")
    bound = 3 * tol.eps
    found = []
    for rows in _TRIPLES:
        sub_rows = M[rows, :]
        for cols in _TRIPLES:
            S = sub_rows[:, cols]
            G = S @ S.conj().T
            worst = max(abs(G[0, 1]), abs(G[0, 2]), abs(G[1, 2]))
            if worst <= bound:
                found.append(
                    SubmatrixLoc(rows=tuple(r + 1 for r in rows), cols=tuple(c + 1 for c in cols))
                )
    return found


def h2_block_structure(M, tol: Tolerance = DEFAULT_TOL):
    """First (lexicographically smallest) row/column pairing making all nine
    2x2 blocks sub-CHMs, or None if the matrix is not H2-reducible.

    Searches all 15 x 15 pairing combinations.
    """
    M = as_matrix(M)
    if M.shape != (6, 6):
        raise DimensionMismatchError(f"expected a 6x6 matrix, got {M.shape}")
    check = is_chm(M, tol)
    if not check.ok:
        raise NotCHMError(f"block search requires a CHM (residual {check.residual:.3g})")
    for rp in _PAIRINGS:
        for cp in _PAIRINGS:
            if all(
                is_sub_chm_2x2(M[r1, c1], M[r1, c2], M[r2, c1], M[r2, c2], tol).ok
                for r1, r2 in rp
                for c1, c2 in cp
            ):
                return H2Structure(
                    row_pairing=tuple((a + 1, b + 1) for a, b in rp),
                    col_pairing=tuple((a + 1, b + 1) for a, b in cp),
                )
    return None


def forbidden_count_check(n: int) -> bool:
    """True iff a 2x2 sub-CHM count is admissible for an H2-reducible matrix.

    Counts 10..16 and 18 cannot occur; a False here is a data-integrity
    alarm for the caller, which knows whether the H2 hypothesis holds.
    """
    if n < 0:
        raise ValueError("count must be nonnegative")
    return n not in FORBIDDEN_COUNTS
