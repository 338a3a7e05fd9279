"""Two-sided numerical checks of the structured-matrix determinant identities.

These exist as a harness: each function evaluates both sides of an identity
independently and reports the relative deviation.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from ..errors import LemmaPreconditionError, PoleError
from .coronal import coronal_numeric

DEFAULT_TOL = 1e-8


class LemmaCheck(NamedTuple):
    rank_one_det: bool
    coronal_det: bool
    shifted_ones_inverse: bool


def adjugate(m) -> np.ndarray:
    """Adjugate from cofactors (no inverse involved, so singular M is fine)."""
    a = np.asarray(m, dtype=float)
    n = a.shape[0]
    if n == 1:
        return np.ones((1, 1))
    adj = np.empty_like(a)
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(a, i, axis=0), j, axis=1)
            adj[j, i] = (-1) ** (i + j) * np.linalg.det(minor)
    return adj


def _rel(lhs: float, rhs: float, *scale_terms: float) -> float:
    scale = max([1.0, abs(lhs), abs(rhs)] + [abs(t) for t in scale_terms])
    return abs(lhs - rhs) / scale


def rank_one_det_deviation(m, b: float) -> float:
    """``det(M + bJ)`` against ``det(M) + b 1^T adj(M) 1``."""
    a = np.asarray(m, dtype=float)
    n = a.shape[0]
    lhs = np.linalg.det(a + b * np.ones((n, n)))
    det_m = np.linalg.det(a)
    corr = b * float(np.sum(adjugate(a)))
    return _rel(lhs, det_m + corr, det_m, corr)


def coronal_det_deviation(m, b: float, nu: float) -> float:
    """``det(nu I - M - bJ)`` against ``(1 - b coronal_M(nu)) det(nu I - M)``."""
    a = np.asarray(m, dtype=float)
    n = a.shape[0]
    shifted = nu * np.eye(n) - a
    try:
        ups = coronal_numeric(a, nu)
    except PoleError as exc:
        raise LemmaPreconditionError(f"nu={nu} is an eigenvalue of M") from exc
    lhs = np.linalg.det(shifted - b * np.ones((n, n)))
    det_s = np.linalg.det(shifted)
    return _rel(lhs, (1.0 - b * ups) * det_s, det_s, b * ups * det_s)


def shifted_ones_inverse(n: int, b: float, c: float) -> np.ndarray:
    """Closed form of ``(bI - cJ)^{-1}``: ``I/b + c/(b(b - nc)) J``."""
    if b == 0 or math.isclose(b, n * c, rel_tol=0.0, abs_tol=1e-14 * max(1.0, abs(b))):
        raise LemmaPreconditionError(f"bI - cJ is singular for b={b}, c={c}, n={n}")
    return np.eye(n) / b + c / (b * (b - n * c)) * np.ones((n, n))


def shifted_ones_inverse_deviation(n: int, b: float, c: float) -> float:
    closed = shifted_ones_inverse(n, b, c)
    direct = np.linalg.inv(b * np.eye(n) - c * np.ones((n, n)))
    return float(np.max(np.abs(closed - direct))) / max(1.0, float(np.max(np.abs(direct))))


def lemma_deviations(m, b: float, c: float, nu: float) -> LemmaCheck:
    """Relative deviations of the three identities for one instance."""
    a = np.asarray(m, dtype=float)
    return LemmaCheck(
        rank_one_det_deviation(a, b),
        coronal_det_deviation(a, b, nu),
        shifted_ones_inverse_deviation(a.shape[0], b, c),
    )


def rank_one_identities_check(m, b: float, c: float, nu: float, tol: float = DEFAULT_TOL) -> LemmaCheck:
    """Per-identity agreement flags (rank-one det, coronal det, (bI-cJ)^{-1})."""
    dev = lemma_deviations(m, b, c, nu)
    return LemmaCheck(*(d <= tol for d in dev))


def constant_row_sum_coronal_deviation(m, nu: float) -> float:
    """Coronal of a constant-row-sum matrix against ``n / (nu - t)``."""
    a = np.asarray(m, dtype=float)
    sums = a.sum(axis=1)
    t = float(sums[0])
    if not np.allclose(sums, t, rtol=0, atol=1e-12 * max(1.0, abs(t))):
        raise LemmaPreconditionError("matrix rows do not share a common sum")
    return _rel(coronal_numeric(a, nu), a.shape[0] / (nu - t))


def kab_alpha_spectrum(a: int, b: int, alpha: float) -> list[float]:
    """Closed-form ``A_alpha(K_{a,b})`` eigenvalues, non-increasing."""
    s = a + b
    root = math.sqrt(alpha * alpha * s * s + 4 * a * b * (1 - 2 * alpha))
    vals = [(alpha * s + root) / 2, (alpha * s - root) / 2]
    vals += [alpha * a] * (b - 1) + [alpha * b] * (a - 1)
    return sorted(vals, reverse=True)
