"""Coronal values ``1^T (nu I - M)^{-1} 1``."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..errors import InvalidParameterError, PoleError
from .exact import solve_exact, to_fraction_matrix

POLE_COND = 1e12


def coronal_numeric(m, nu: float, max_cond: float = POLE_COND) -> float:
    """Coronal of a square matrix at ``nu`` via one dense solve.

    Raises :class:`PoleError` when ``nu I - M`` is numerically singular,
    i.e. its condition number exceeds ``max_cond``.  The error carries the
    eigenvalue of ``M`` closest to ``nu``.
    """
    a = np.asarray(m, dtype=float)
    n = a.shape[0]
    if n == 0:
        return 0.0
    shifted = nu * np.eye(n) - a
    symmetric = np.allclose(a, a.T, rtol=0.0, atol=1e-12)
    if symmetric:
        lam = np.linalg.eigvalsh(a)
        dist = np.abs(nu - lam)
        cond = dist.max() / dist.min() if dist.min() > 0 else np.inf
    else:
        lam = np.linalg.eigvals(a)
        cond = np.linalg.cond(shifted)
        dist = np.abs(nu - lam)
    if not np.isfinite(cond) or cond > max_cond:
        nearest = lam[int(np.argmin(dist))]
        raise PoleError(f"nu={nu!r} is at an eigenvalue (~{nearest!r}) of the matrix", eigenvalue=nearest)
    x = np.linalg.solve(shifted, np.ones(n))
    return float(np.sum(x))


def coronal_exact(m, nu) -> Fraction:
    """Exact coronal for rational ``M`` and ``nu``."""
    a = to_fraction_matrix(m)
    n = len(a)
    nu = Fraction(nu)
    shifted = [[(nu if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]
    try:
        x = solve_exact(shifted, [1] * n)
    except ZeroDivisionError as exc:
        raise PoleError(f"nu={nu} is an eigenvalue of the matrix", eigenvalue=nu) from exc
    return sum(x, Fraction(0))


def kab_coronal_parts(a: int, b: int, alpha, nu):
    """Numerator and denominator of the closed-form K_{a,b} coronal."""
    s = a + b
    num = s * nu - alpha * s * s + 2 * a * b
    den = nu * nu - alpha * s * nu + (2 * alpha - 1) * a * b
    return num, den


def coronal_kab(a: int, b: int, alpha: float, nu: float) -> float:
    """Closed-form coronal of ``A_alpha(K_{a,b})``.

    Equals ``((a+b) nu - alpha (a+b)^2 + 2ab) / (nu^2 - alpha (a+b) nu + (2 alpha - 1) ab)``.
    """
    if a < 1 or b < 1:
        raise InvalidParameterError("K_{a,b} needs a, b >= 1")
    num, den = kab_coronal_parts(a, b, alpha, nu)
    if abs(den) <= 1e-12 * max(1.0, nu * nu, abs(alpha * (a + b) * nu), a * b):
        raise PoleError(f"nu={nu!r} is a pole of the K_{{{a},{b}}} coronal", eigenvalue=nu)
    return num / den
