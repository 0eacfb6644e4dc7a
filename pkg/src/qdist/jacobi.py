"""Floating symmetric eigensolver (cyclic Jacobi) and matrix-inequality checkers.

The solver runs full sweeps of Givens rotations until the off-diagonal
Frobenius norm drops below 1e-12 * (1 + ||input||_F); rotations are exactly
orthogonal up to rounding, so eigenvalue sums track the trace. The same
kernel runs on a whole stacked batch of matrices at once, which is what the
exhaustive small-graph sweeps use.

Tolerance ledger: solver residual 1e-12 * scale, inequality checks 1e-8
slack, interval guard band 1e-6 (three decades apart at each step).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

MAX_SWEEPS = 50
RESIDUAL_RTOL = 1e-12
INEQ_SLACK = 1e-8
GUARD_BAND = 1e-6
TRACE_TOL = 1e-9


class SymmetryError(ValueError):
    """Input matrix is not symmetric within tolerance."""


class ConvergenceError(RuntimeError):
    """Jacobi iteration failed to meet the residual bound within MAX_SWEEPS."""


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in nonincreasing order plus the solver's final off-diagonal norm."""

    values: tuple[float, ...]
    residual: float

    def q(self, i: int) -> float:
        """1-indexed i-th largest eigenvalue."""
        return self.values[i - 1]

    def __len__(self) -> int:
        return len(self.values)


def _offdiag_norms(A: np.ndarray) -> np.ndarray:
    # summed directly over off-diagonal entries: the ||A||^2 - ||diag||^2
    # form cancels catastrophically once the residual is near sqrt(eps)*||A||
    n = A.shape[1]
    mask = 1.0 - np.eye(n)
    return np.sqrt((A * A * mask).sum(axis=(1, 2)))


def jacobi_batch(mats: np.ndarray, max_sweeps: int = MAX_SWEEPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigenvalues (nonincreasing) and residuals for a stack of symmetric matrices.

    mats has shape (B, n, n); returns (values (B, n), residuals (B,)).
    """
    A = np.array(mats, dtype=float)
    if A.ndim != 3 or A.shape[1] != A.shape[2]:
        raise SymmetryError(f"expected stacked square matrices, got shape {A.shape}")
    B, n, _ = A.shape
    scale = 1.0 + np.sqrt((A * A).sum(axis=(1, 2)))
    asym = np.abs(A - A.transpose(0, 2, 1)).max(axis=(1, 2)) if n else np.zeros(B)
    bad = asym > RESIDUAL_RTOL * scale
    if bad.any():
        raise SymmetryError(f"matrix {int(np.argmax(bad))} asymmetric by {asym.max():.3e}")
    A = 0.5 * (A + A.transpose(0, 2, 1))
    traces = np.einsum("bii->b", A)
    tol = RESIDUAL_RTOL * scale
    if n > 1:
        converged = False
        for _ in range(max_sweeps):
            if (_offdiag_norms(A) <= tol).all():
                converged = True
                break
            for p in range(n - 1):
                for q in range(p + 1, n):
                    apq = A[:, p, q]
                    nz = apq != 0.0
                    if not nz.any():
                        continue
                    app = A[:, p, p]
                    aqq = A[:, q, q]
                    theta = np.zeros_like(apq)
                    with np.errstate(over="ignore", divide="ignore"):
                        np.divide(aqq - app, 2.0 * apq, out=theta, where=nz)
                        sg = np.where(theta >= 0.0, 1.0, -1.0)
                        denom = np.abs(theta) + np.sqrt(theta * theta + 1.0)
                    t = np.where(nz, sg / denom, 0.0)
                    c = 1.0 / np.sqrt(t * t + 1.0)
                    s = t * c
                    rp = A[:, p, :].copy()
                    rq = A[:, q, :].copy()
                    A[:, p, :] = c[:, None] * rp - s[:, None] * rq
                    A[:, q, :] = s[:, None] * rp + c[:, None] * rq
                    cp = A[:, :, p].copy()
                    cq = A[:, :, q].copy()
                    A[:, :, p] = c[:, None] * cp - s[:, None] * cq
                    A[:, :, q] = s[:, None] * cp + c[:, None] * cq
        else:
            converged = (_offdiag_norms(A) <= tol).all()
        if not converged:
            worst = int(np.argmax(_offdiag_norms(A) / tol))
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(worst batch index {worst}, residual {_offdiag_norms(A)[worst]:.3e})"
            )
    d = np.einsum("bii->bi", A)
    vals = -np.sort(-d, axis=1)
    residuals = _offdiag_norms(A)
    drift = np.abs(vals.sum(axis=1) - traces)
    if n and (drift > TRACE_TOL * n).any():
        raise ConvergenceError(f"eigenvalue sum drifted from trace by {drift.max():.3e}")
    return vals, residuals


def eigenvalues_sym(mat: Sequence[Sequence[float]] | np.ndarray) -> Spectrum:
    """Spectrum of one dense symmetric matrix."""
    A = np.atleast_2d(np.array(mat, dtype=float))
    if A.shape[0] != A.shape[1]:
        raise SymmetryError(f"expected a square matrix, got shape {A.shape}")
    if A.shape[0] == 0:
        return Spectrum((), 0.0)
    vals, residuals = jacobi_batch(A[None, :, :])
    return Spectrum(tuple(float(v) for v in vals[0]), float(residuals[0]))


def weyl_check(
    A: Sequence[Sequence[float]] | np.ndarray,
    B: Sequence[Sequence[float]] | np.ndarray,
    i: int,
    j: int,
    slack: float = INEQ_SLACK,
) -> tuple[bool, tuple[float, float, float]]:
    """Check rho_{i+j-1}(A+B) <= rho_i(A) + rho_j(B) (1-indexed) with slack.

    Returns the flag and the witness triple (lhs, rho_i(A), rho_j(B)).
    """
    A = np.array(A, dtype=float)
    B = np.array(B, dtype=float)
    n = A.shape[0]
    if A.shape != B.shape:
        raise ValueError(f"shape mismatch {A.shape} vs {B.shape}")
    if not (1 <= i <= n and 1 <= j <= n and i + j - 1 <= n):
        raise IndexError(f"indices (i={i}, j={j}) out of range for order {n}")
    sa = eigenvalues_sym(A)
    sb = eigenvalues_sym(B)
    ss = eigenvalues_sym(A + B)
    lhs = ss.q(i + j - 1)
    ra, rb = sa.q(i), sb.q(j)
    return lhs <= ra + rb + slack, (lhs, ra, rb)


def interlacing_check(
    M: Sequence[Sequence[float]] | np.ndarray,
    rows: Sequence[int],
    slack: float = INEQ_SLACK,
) -> tuple[bool, list[tuple[float, float, float]]]:
    """Cauchy interlacing for the principal submatrix on the given rows.

    For each i, the witness row is (rho_{n-p+i}(M), rho_i(B), rho_i(M)); the
    check passes iff the left value <= middle <= right holds with slack.
    """
    M = np.array(M, dtype=float)
    idx = sorted(set(int(r) for r in rows))
    if not idx:
        raise ValueError("row subset must be nonempty")
    n = M.shape[0]
    if idx[0] < 0 or idx[-1] >= n:
        raise IndexError(f"row subset {idx} out of range for order {n}")
    p = len(idx)
    sm = eigenvalues_sym(M)
    sb = eigenvalues_sym(M[np.ix_(idx, idx)])
    ok = True
    witness = []
    for i in range(1, p + 1):
        lo, mid, hi = sm.q(n - p + i), sb.q(i), sm.q(i)
        witness.append((lo, mid, hi))
        if not (lo <= mid + slack and mid <= hi + slack):
            ok = False
    return ok, witness
