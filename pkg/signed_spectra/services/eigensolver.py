"""Dense symmetric eigensolvers.

The default is a parallel-ordered Jacobi sweep: each round rotates N/2
disjoint index pairs at once, in a fixed tournament order, so degenerate
eigenspaces come out the same on every run and platform.
"""
import logging
from typing import Optional

import numpy as np

from signed_spectra.core.config import settings
from signed_spectra.core.errors import ConvergenceFailure

logger = logging.getLogger(__name__)


def _off_diagonal_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _round_robin(n: int) -> list[tuple[np.ndarray, np.ndarray]]:
    """Tournament schedule: n − 1 rounds (n even) of disjoint (p, q) pairs, p < q, covering every pair once."""
    m = n + n % 2
    ring = list(range(1, m))
    rounds = []
    for _ in range(m - 1):
        players = [0] + ring
        pairs = [
            (min(p, q), max(p, q))
            for p, q in zip(players[: m // 2], reversed(players[m // 2 :]))
            if q < n and p < n
        ]
        if pairs:
            p, q = np.array(pairs, dtype=np.intp).T
            rounds.append((p, q))
        ring = ring[-1:] + ring[:-1]
    return rounds


def _rotate(a: np.ndarray, v: np.ndarray, p: np.ndarray, q: np.ndarray) -> None:
    """Apply one round of disjoint rotations in place, annihilating every a[p, q] that is nonzero."""
    apq = a[p, q]
    active = apq != 0.0
    if not active.any():
        return
    p, q, apq = p[active], q[active], apq[active]
    theta = (a[q, q] - a[p, p]) / (2.0 * apq)
    t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
    c = 1.0 / np.hypot(t, 1.0)
    s = t * c

    col_p, col_q = a[:, p], a[:, q]
    a[:, p] = c * col_p - s * col_q
    a[:, q] = s * col_p + c * col_q
    row_p, row_q = a[p, :], a[q, :]
    a[p, :] = c[:, None] * row_p - s[:, None] * row_q
    a[q, :] = s[:, None] * row_p + c[:, None] * row_q
    a[p, q] = a[q, p] = 0.0

    vec_p, vec_q = v[:, p], v[:, q]
    v[:, p] = c * vec_p - s * vec_q
    v[:, q] = s * vec_p + c * vec_q


def jacobi_eigh(
    matrix: np.ndarray,
    tolerance: Optional[float] = None,
    max_sweeps: Optional[int] = None,
) -> tuple[np.ndarray, np.ndarray]:
    """Jacobi rotations on a dense symmetric matrix, one tournament round at a time.

    Returns ascending eigenvalues and the matching orthonormal eigenvectors
    as columns. Stops once the off-diagonal Frobenius norm drops below
    ``tolerance`` times max(1, ‖A‖_F).
    """
    tolerance = settings.JACOBI_TOLERANCE if tolerance is None else tolerance
    max_sweeps = settings.JACOBI_MAX_SWEEPS if max_sweeps is None else max_sweeps

    a = np.array(matrix, dtype=np.float64)
    n = a.shape[0]
    v = np.eye(n)
    threshold = tolerance * max(1.0, float(np.linalg.norm(a)))
    schedule = _round_robin(n)

    for sweep in range(max_sweeps + 1):
        off = _off_diagonal_norm(a)
        if off <= threshold:
            logger.debug("jacobi converged n=%d sweeps=%d off=%.3e", n, sweep, off)
            break
        if sweep == max_sweeps:
            raise ConvergenceFailure(
                f"Jacobi did not converge after {max_sweeps} sweeps (off-diagonal norm {off:.3e})"
            )
        for p, q in schedule:
            _rotate(a, v, p, q)

    eigenvalues = np.diag(a).copy()
    order = np.argsort(eigenvalues, kind="stable")
    return eigenvalues[order], v[:, order]


def eigh(matrix: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Dispatch on ``settings.EIGENSOLVER``."""
    if settings.EIGENSOLVER == "lapack":
        eigenvalues, vectors = np.linalg.eigh(np.asarray(matrix, dtype=np.float64))
        return eigenvalues, vectors
    return jacobi_eigh(matrix)


def fix_signs(vectors: np.ndarray, atol: float = 1e-12) -> np.ndarray:
    """Flip each column so its first entry that is nonzero (beyond ``atol``) is positive."""
    out = vectors.copy()
    for j in range(out.shape[1]):
        column = out[:, j]
        scale = max(float(np.max(np.abs(column))), 1.0) if column.size else 1.0
        nonzero = np.flatnonzero(np.abs(column) > atol * scale)
        if nonzero.size and column[nonzero[0]] < 0:
            out[:, j] = -column
    return out
