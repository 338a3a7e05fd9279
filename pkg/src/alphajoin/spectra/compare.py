"""Direct (eigensolver) join spectra and multiset comparison."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from ..graph import join
from ..linalg import Spectrum, eigenvalues_sorted
from ..linalg.eigen import default_cluster_tol
from .closed_form import ClosedFormSpectrum
from .joinspec import JoinSpec
from .matrix import alpha_matrix


def direct_join_spectrum(spec: JoinSpec, alpha: float, cluster_tol: Optional[float] = None,
                         method: str = "lapack") -> Spectrum:
    """Build the join, assemble A_alpha and eigensolve it."""
    m = alpha_matrix(join(spec.kind, spec.g1, spec.g2), alpha)
    if cluster_tol is None:
        cluster_tol = default_cluster_tol(m)
    return Spectrum.from_values(eigenvalues_sorted(m, method=method), cluster_tol)


def flat_values(s) -> np.ndarray:
    """Non-increasing eigenvalue list of a Spectrum, ClosedFormSpectrum or array."""
    if isinstance(s, Spectrum):
        vals = s.flatten()
    elif isinstance(s, ClosedFormSpectrum):
        vals = s.values()
    else:
        vals = np.asarray(s, dtype=float).ravel()
    return np.sort(np.asarray(vals, dtype=float))[::-1]


@dataclass(frozen=True)
class SpectrumComparison:
    equal: bool
    max_deviation: float
    first_mismatch: Optional[int]
    tol: float
    reason: str = ""

    def __bool__(self) -> bool:
        return self.equal

    def to_dict(self) -> dict:
        return {
            "equal": self.equal,
            "max_deviation": self.max_deviation,
            "first_mismatch": self.first_mismatch,
            "tol": self.tol,
            "reason": self.reason,
        }


def spectra_equal(s1, s2, tol: float = 1e-7) -> SpectrumComparison:
    """Compare two spectra as sorted multisets.

    Deviations are absolute differences divided by ``max(1, largest |value|)``,
    so the tolerance is relative for large spectra and absolute for small ones.
    A dimension mismatch gives ``equal=False`` with a reason instead of raising.
    """
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    a, b = flat_values(s1), flat_values(s2)
    if a.size != b.size:
        return SpectrumComparison(False, float("inf"), None, tol,
                                  f"dimension mismatch: {a.size} vs {b.size}")
    if a.size == 0:
        return SpectrumComparison(True, 0.0, None, tol)
    scale = max(1.0, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
    dev = np.abs(a - b) / scale
    over = np.nonzero(dev > tol)[0]
    first = int(over[0]) if over.size else None
    reason = "" if first is None else f"index {first}: {float(a[first])!r} vs {float(b[first])!r}"
    return SpectrumComparison(first is None, float(np.max(dev)), first, tol, reason)
