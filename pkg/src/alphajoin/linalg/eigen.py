"""Dense symmetric eigenvalues and multiplicity-clustered spectra."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from ..errors import ContractViolation

SYMMETRY_TOL = 1e-12


def as_symmetric(m) -> np.ndarray:
    """Return ``m`` as a float array, asserting symmetry to 1e-12."""
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ContractViolation(f"expected a square matrix, got shape {a.shape}")
    if a.size and np.max(np.abs(a - a.T)) > SYMMETRY_TOL:
        raise ContractViolation("matrix is not symmetric")
    return a


def inf_norm(a: np.ndarray) -> float:
    return float(np.max(np.sum(np.abs(a), axis=1))) if a.size else 0.0


def default_cluster_tol(a: np.ndarray) -> float:
    return 1e-8 * max(1.0, inf_norm(a))


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues with multiplicities, sorted non-increasing."""

    eigenvalues: tuple[tuple[float, int], ...]

    @classmethod
    def from_values(cls, values: Iterable[float], cluster_tol: float = 1e-8) -> "Spectrum":
        """Merge values whose consecutive gaps are at most ``cluster_tol``.

        Single linkage on the sorted list; each cluster is represented by its
        mean.
        """
        vals = sorted((float(v) for v in values), reverse=True)
        groups: list[list[float]] = []
        for v in vals:
            if groups and groups[-1][-1] - v <= cluster_tol:
                groups[-1].append(v)
            else:
                groups.append([v])
        return cls(tuple((math.fsum(g) / len(g), len(g)) for g in groups))

    @property
    def dim(self) -> int:
        return sum(k for _, k in self.eigenvalues)

    def flatten(self) -> np.ndarray:
        return np.array([v for v, k in self.eigenvalues for _ in range(k)], dtype=float)

    def values(self) -> list[float]:
        return [v for v, _ in self.eigenvalues]

    def to_dict(self, clause: Optional[str] = None) -> dict:
        return {"eigenvalues": [{"value": v, "multiplicity": k, "clause": clause} for v, k in self.eigenvalues]}

    def __str__(self):
        parts = [f"{v:.6g}" if k == 1 else f"[{v:.6g}]^{k}" for v, k in self.eigenvalues]
        return "{" + ", ".join(parts) + "}"


def jacobi_eigenvalues(m, tol: float = 1e-15, max_sweeps: int = 60) -> np.ndarray:
    """Cyclic Jacobi eigenvalues of a symmetric matrix (unsorted diagonal).

    Each sweep annihilates every off-diagonal pair once; iteration stops when
    the off-diagonal Frobenius mass falls below ``tol * ||m||_F``.
    """
    a = as_symmetric(m).copy()
    n = a.shape[0]
    fro = float(np.linalg.norm(a))
    if n < 2 or fro == 0.0:
        return np.diag(a).copy()
    for _ in range(max_sweeps):
        off = math.sqrt(max(float(np.sum(a * a) - np.sum(np.diag(a) ** 2)), 0.0))
        if off <= tol * fro:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= 1e-300:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                colp = a[:, p].copy()
                colq = a[:, q]
                a[:, p] = c * colp - s * colq
                a[:, q] = s * colp + c * colq
                rowp = a[p, :].copy()
                rowq = a[q, :]
                a[p, :] = c * rowp - s * rowq
                a[q, :] = s * rowp + c * rowq
                a[p, q] = a[q, p] = 0.0
    return np.diag(a).copy()


def eigenvalues_sorted(m, method: str = "lapack") -> np.ndarray:
    """All eigenvalues of a symmetric matrix, non-increasing."""
    a = as_symmetric(m)
    if a.shape[0] == 0:
        return np.zeros(0)
    if method == "lapack":
        vals = np.linalg.eigvalsh(a)
    elif method == "jacobi":
        vals = jacobi_eigenvalues(a)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    return np.sort(vals)[::-1]


def sym_eigenvalues(m, cluster_tol: Optional[float] = None, method: str = "lapack") -> Spectrum:
    a = as_symmetric(m)
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(a)
    if cluster_tol <= 0:
        raise ValueError("cluster_tol must be positive")
    return Spectrum.from_values(eigenvalues_sorted(a, method), cluster_tol)
