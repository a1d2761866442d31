"""Dephased canonical form, complex-equivalence search, real-entry structure.

Two matrices A, B are complex equivalent when A = Pr Dr B Dc Pc for
permutation matrices P and unimodular diagonal matrices D. Dephasing
(normalizing the first row and column to ones) absorbs the diagonal
factors, so the search only has to enumerate permutation pairs of B and
compare dephased forms.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass

import numpy as np

from .core import DEFAULT_EPS, DEFAULT_TOL, Tolerance, as_matrix, is_chm
from .errors import (
    ChmError,
    DimensionMismatchError,
    NotCHMError,
    SearchTimeoutError,
    ZeroPivotError,
)

# Signature granularity for the permutation prefilter. Collisions fall
# through to the exact entrywise comparison, so this only trades speed.
_PREFILTER_ATOL = 1e-7


@dataclass(frozen=True, eq=False)
class EquivalenceWitness:
    """Permutations (1-based) and unimodular phases realizing Pr Dr B Dc Pc.

    row_phases[m] / col_phases[m] scale row/column m of the matrix the
    witness is applied to, before the permutations relabel indices.
    """

    row_perm: tuple[int, ...]
    col_perm: tuple[int, ...]
    row_phases: np.ndarray
    col_phases: np.ndarray

    def __post_init__(self):
        d = len(self.row_perm)
        for perm in (self.row_perm, self.col_perm):
            if sorted(perm) != list(range(1, d + 1)):
                raise ValueError(f"not a permutation of 1..{d}: {perm}")
        if len(self.row_phases) != d or len(self.col_phases) != d:
            raise DimensionMismatchError("phase vectors must have length d")

    def to_obj(self) -> dict:
        return {
            "rowPerm": list(self.row_perm),
            "colPerm": list(self.col_perm),
            "rowPhases": [{"re": float(z.real), "im": float(z.imag)} for z in self.row_phases],
            "colPhases": [{"re": float(z.real), "im": float(z.imag)} for z in self.col_phases],
        }

    @classmethod
    def from_obj(cls, obj: dict) -> "EquivalenceWitness":
        return cls(
            row_perm=tuple(obj["rowPerm"]),
            col_perm=tuple(obj["colPerm"]),
            row_phases=np.array([complex(e["re"], e["im"]) for e in obj["rowPhases"]]),
            col_phases=np.array([complex(e["re"], e["im"]) for e in obj["colPhases"]]),
        )


@dataclass(frozen=True)
class RealSubmatrixReport:
    """A fully real 3x2 submatrix (1-based indices) and its rank over the reals."""

    rows: tuple[int, int, int]
    cols: tuple[int, int]
    rank: int


def dephase(M) -> np.ndarray:
    """Equivalent matrix whose first row and first column are all ones.

    Entry (j,k) becomes M_jk * M_11 / (M_j1 * M_1k). Requires the first
    row and column to be bounded away from zero.
    """
    M = as_matrix(M)
    col0 = M[:, 0]
    row0 = M[0, :]
    if min(np.abs(col0).min(), np.abs(row0).min()) < DEFAULT_EPS:
        raise ZeroPivotError("first row/column entry too close to zero to dephase")
    return M * (M[0, 0] / (col0[:, None] * row0[None, :]))


def apply_witness(M, witness: EquivalenceWitness) -> np.ndarray:
    """Apply Pr Dr M Dc Pc; preserves unimodular entries."""
    M = as_matrix(M)
    d = M.shape[0]
    if len(witness.row_perm) != d:
        raise DimensionMismatchError(
            f"witness is for dimension {len(witness.row_perm)}, matrix has {d}"
        )
    rp = np.asarray(witness.row_perm) - 1
    cp = np.asarray(witness.col_perm) - 1
    phased = witness.row_phases[:, None] * M * witness.col_phases[None, :]
    return phased[np.ix_(rp, cp)]


def count_real_entries(M, tol: Tolerance = DEFAULT_TOL) -> int:
    """Number of entries whose imaginary part is within eps of zero."""
    M = np.asarray(M, dtype=np.complex128)
    return int((np.abs(M.imag) <= tol.eps).sum())


def real_submatrices_3x2(M, tol: Tolerance = DEFAULT_TOL) -> list[RealSubmatrixReport]:
    """All fully real 3x2 submatrices of a 6x6 matrix, with their real rank.

    Enumerates the 300 row-triple/column-pair choices in lexicographic
    order. Rank is decided by 2x2 minors: any minor with |value| > eps
    certifies rank two, otherwise the columns are proportional (rank one).
    """
    M = as_matrix(M)
    if M.shape != (6, 6):
        raise DimensionMismatchError(f"expected a 6x6 matrix, got {M.shape}")
    eps = tol.eps
    reports = []
    for rows in itertools.combinations(range(6), 3):
        for cols in itertools.combinations(range(6), 2):
            S = M[np.ix_(rows, cols)]
            if np.abs(S.imag).max() > eps:
                continue
            X = S.real
            rank = 1
            for a, b in itertools.combinations(range(3), 2):
                if abs(X[a, 0] * X[b, 1] - X[a, 1] * X[b, 0]) > eps:
                    rank = 2
                    break
            reports.append(
                RealSubmatrixReport(
                    rows=tuple(r + 1 for r in rows),
                    cols=tuple(c + 1 for c in cols),
                    rank=rank,
                )
            )
    return reports


def _signature(M) -> tuple[np.ndarray, np.ndarray]:
    # Sorted multisets of entry distances to 1 and to i. Together these pin
    # down the multiset of entry phases, are invariant under row/column
    # permutation of a dephased form, and (unlike raw angles) have no branch
    # cut at phase +-pi, so fp jitter cannot flip a bucket.
    flat = M.ravel()
    return np.sort(np.abs(flat - 1.0)), np.sort(np.abs(flat - 1.0j))


def _signatures_close(sig_a, sig_b) -> bool:
    return np.allclose(sig_a[0], sig_b[0], rtol=0.0, atol=_PREFILTER_ATOL) and np.allclose(
        sig_a[1], sig_b[1], rtol=0.0, atol=_PREFILTER_ATOL
    )


def _dephase_pivot(M, s: int, t: int) -> np.ndarray:
    # Dephased form with row s / column t used as the ones row/column.
    return M * (M[s, t] / (M[:, t][:, None] * M[s, :][None, :]))


def _complete_columns(ok, t: int, d: int):
    # Lexicographically smallest injective tau with tau[0]=t and
    # ok[k, tau[k]] for all k. Columns of a Hadamard matrix are pairwise
    # non-proportional, so candidates are almost always unique; the
    # backtracking is just for safety.
    used = [False] * d
    used[t] = True
    tau = [t]

    def extend(k):
        if k == d:
            return True
        for m in range(d):
            if not used[m] and ok[k, m]:
                used[m] = True
                tau.append(m)
                if extend(k + 1):
                    return True
                used[m] = False
                tau.pop()
        return False

    return tuple(tau) if extend(1) else None


def _build_witness(A, B, sigma, tau, eps) -> EquivalenceWitness:
    d = len(sigma)
    Bp = B[np.ix_(sigma, tau)]
    rho = A[:, 0] / Bp[:, 0]
    gamma = (A[0, :] / Bp[0, :]) / rho[0]
    row_phases = np.empty(d, dtype=np.complex128)
    col_phases = np.empty(d, dtype=np.complex128)
    row_phases[list(sigma)] = rho
    col_phases[list(tau)] = gamma
    witness = EquivalenceWitness(
        row_perm=tuple(s + 1 for s in sigma),
        col_perm=tuple(t + 1 for t in tau),
        row_phases=row_phases,
        col_phases=col_phases,
    )
    err = float(np.abs(apply_witness(B, witness) - A).max())
    if err > eps:
        raise ChmError(f"internal error: witness fails verification (residual {err:.3g})")
    return witness


def are_equivalent(A, B, tol: Tolerance = DEFAULT_TOL, timeout: float | None = None):
    """Search for a witness with apply_witness(B, W) == A entrywise within eps.

    Returns the witness with the lexicographically smallest
    (row_perm, col_perm) if the matrices are equivalent, else None.

    The search enumerates row permutations sigma of B in lexicographic
    order; for each, matching columns of the dephased forms are assigned
    directly, so the full 6! x 6! candidate space is never materialized.
    A per-pivot signature prefilter discards most pivot classes first.
    Raises SearchTimeoutError if a time budget (seconds) is given and hit.
    """
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise DimensionMismatchError(f"shapes differ: {A.shape} vs {B.shape}")
    for label, M in (("A", A), ("B", B)):
        check = is_chm(M, tol)
        if not check.ok:
            raise NotCHMError(f"{label} is not a CHM (residual {check.residual:.3g})")
    d = A.shape[0]
    eps = tol.eps

    Ad = dephase(A)
    sig_a = _signature(Ad)
    allowed = {}
    for s in range(d):
        ts = [
            t
            for t in range(d)
            if _signatures_close(_signature(_dephase_pivot(B, s, t)), sig_a)
        ]
        if ts:
            allowed[s] = ts
    if not allowed:
        return None

    deadline = None if timeout is None else time.monotonic() + timeout
    total = math.factorial(d)
    for examined, sigma in enumerate(itertools.permutations(range(d))):
        ts = allowed.get(sigma[0])
        if not ts:
            continue
        if deadline is not None and time.monotonic() > deadline:
            raise SearchTimeoutError(examined=examined, total=total)
        R = B[sigma, :]
        E = R / R[0, :]
        for t in ts:
            # tau matches when E[:, tau[k]] == Ad[:, k] * E[:, t] entrywise.
            T = Ad * E[:, t][:, None]
            diff = np.abs(E[:, None, :] - T[:, :, None]).max(axis=0)
            tau = _complete_columns(diff <= eps, t, d)
            if tau is not None:
                return _build_witness(A, B, sigma, tau, eps)
    return None
