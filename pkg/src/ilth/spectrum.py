"""Cyclic Jacobi diagonalization for small dense symmetric matrices."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .hypergraph import Graph, ResourceLimitError

DEFAULT_TOL = 1e-10
DEFAULT_MAX_SWEEPS = 100
DEFAULT_MAX_N = 4096


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]  # descending, with multiplicity
    tolerance: float
    sweeps: int


def _off_norm(a: np.ndarray) -> float:
    # summed directly; ||A||^2 - ||diag||^2 cancels catastrophically near convergence
    off = a - np.diag(np.diag(a))
    return math.sqrt(float(np.sum(off * off)))


def jacobi_eigenvalues(
    matrix: np.ndarray, tol: float = DEFAULT_TOL, max_sweeps: int = DEFAULT_MAX_SWEEPS
) -> tuple[np.ndarray, int]:
    """Eigenvalues of a real symmetric matrix by row-cyclic Jacobi rotations.

    Stops once the off-diagonal Frobenius norm drops below ``tol``. Returns
    the eigenvalues in descending order and the number of sweeps performed.
    """
    a = np.array(matrix, dtype=np.float64, copy=True)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, atol=0.0, rtol=0.0):
        raise ValueError("matrix must be symmetric")
    n = a.shape[0]
    sweeps = 0
    while _off_norm(a) >= tol:
        if sweeps >= max_sweeps:
            raise ConvergenceError(f"no convergence after {max_sweeps} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                # A <- J^T A J with J the (p, q) Givens rotation
                col_p = a[:, p].copy()
                col_q = a[:, q]
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
                row_p = a[p, :].copy()
                row_q = a[q, :]
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                a[p, q] = a[q, p] = 0.0
    return np.sort(np.diag(a))[::-1].copy(), sweeps


def spectrum(
    g: Graph,
    tol: float = DEFAULT_TOL,
    max_n: int = DEFAULT_MAX_N,
    max_sweeps: int = DEFAULT_MAX_SWEEPS,
) -> Spectrum:
    if g.n > max_n:
        raise ResourceLimitError(f"graph has {g.n} vertices, eigensolver cap is {max_n}")
    vals, sweeps = jacobi_eigenvalues(g.adjacency_matrix(), tol, max_sweeps)
    return Spectrum(tuple(float(x) for x in vals), tol, sweeps)


def doubled_spectrum(eigenvalues) -> np.ndarray:
    """Predicted spectrum after one 2-section step: each rho gives phi*rho and psi*rho."""
    rho = np.asarray(eigenvalues, dtype=np.float64)
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    psi = (1.0 - math.sqrt(5.0)) / 2.0
    return np.sort(np.concatenate([phi * rho, psi * rho]))[::-1]
