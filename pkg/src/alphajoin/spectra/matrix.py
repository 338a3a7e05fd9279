"""A_alpha matrices of graphs."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..errors import InvalidParameterError
from ..graph import Graph, degrees


def check_alpha(alpha):
    if not 0 <= alpha <= 1:
        raise InvalidParameterError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    """``alpha D + (1 - alpha) A`` as a float array."""
    check_alpha(alpha)
    a = g.adjacency().astype(float)
    return alpha * np.diag(a.sum(axis=1)) + (1.0 - alpha) * a


def alpha_matrix_exact(g: Graph, alpha) -> list[list[Fraction]]:
    """Exact ``A_alpha`` for rational ``alpha`` (floats are taken at their exact binary value)."""
    alpha = Fraction(alpha)
    check_alpha(alpha)
    deg = degrees(g)
    off = 1 - alpha
    m = [[Fraction(0)] * g.n for _ in range(g.n)]
    for i in range(g.n):
        m[i][i] = alpha * deg[i]
    for i, j in g.edges:
        m[i][j] = m[j][i] = off
    return m


def signless_laplacian(g: Graph) -> np.ndarray:
    a = g.adjacency()
    return np.diag(a.sum(axis=1)) + a
