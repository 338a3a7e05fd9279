"""Characteristic-polynomial factorizations of the four joins with a regular G1.

For ``G1`` t1-regular with n1 vertices and m1 edges, ``G2`` arbitrary with n2
vertices, and ``s`` the number of join partners of each G2 vertex (n1 for
vertex joins, m1 for edge joins)::

    phi(nu) = (nu - excess)^(m1 - n1) * phi_G2(nu - alpha s)
              * prod_{i >= 2} quad(nu, lambda_i)
              * (main(nu) - weight(nu) * coronal_G2(nu - alpha s))

where ``lambda_i`` runs over the A_alpha(G1) eigenvalues other than the
Perron value t1, ``phi_G2`` and ``coronal_G2`` refer to A_alpha(G2).

Every factor below is written as plain arithmetic so the same expression
evaluates on floats, fractions, or :class:`Poly` objects (pass
``Poly.x()`` for ``nu`` to get a polynomial in nu, or for ``lam`` to get a
polynomial in the G1 eigenvalue).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import InvalidInputError, PoleError, PreconditionError
from ..graph import Graph, JoinKind, regularity
from ..linalg import Poly, charpoly_exact, coronal_numeric, det_exact, eigenvalues_sorted
from .joinspec import JoinSpec
from .matrix import alpha_matrix, alpha_matrix_exact, check_alpha

PERRON_TOL = 1e-6


@dataclass(frozen=True)
class JoinFactors:
    kind: JoinKind
    alpha: object
    n1: int
    m1: int
    t1: int
    n2: int

    @property
    def shift(self) -> int:
        return self.m1 if self.kind.edge_join else self.n1

    @property
    def excess(self):
        """Eigenvalue carried by the (nu - excess)^(m1 - n1) factor."""
        a, t1, n2 = self.alpha, self.t1, self.n2
        if self.kind is JoinKind.QEDGE:
            return a * (2 * t1 + n2 + 2) - 2
        if self.kind is JoinKind.TEDGE:
            return 2 * a + 2 * a * t1 + a * n2 - 2
        return 2 * a * (1 + t1) - 2

    def quad(self, nu, lam):
        a, t1, n2 = self.alpha, self.t1, self.n2
        k = self.kind
        if k is JoinKind.QVERTEX:
            return (nu * nu - (t1 - 2 + lam + a * (2 + t1 + n2)) * nu
                    - 2 * a * n2 * (1 - a) - (1 - a * (1 + t1 + n2)) * (t1 + lam))
        if k is JoinKind.QEDGE:
            return (nu * nu - (a * (t1 + n2 + 2) + t1 - 2 + lam) * nu
                    + a * a * t1 * n2 + (a * (t1 + 1) - 1) * (t1 + lam))
        if k is JoinKind.TVERTEX:
            return (nu * nu + (2 - t1 - 2 * a - a * t1 - a * n2 - 2 * lam) * nu
                    - (1 - a) * (t1 - 2 * a * t1 + lam)
                    + (a * t1 + a * n2 + lam) * (t1 - 2 + 2 * a + lam))
        return (nu * nu + (2 - t1 - 2 * a - a * t1 - a * n2 - 2 * lam) * nu
                - t1 * (1 - a) * (1 - 3 * a)
                + (a * t1 + lam) * (t1 - 3 + 3 * a + a * n2 + lam))

    def main(self, nu):
        a, t1, n2 = self.alpha, self.t1, self.n2
        k = self.kind
        if k is JoinKind.QVERTEX:
            return (nu - a * t1 - a * n2) * (nu + 2 - 2 * a - 2 * t1) - 2 * t1 * (1 - a) ** 2
        if k is JoinKind.QEDGE:
            return ((nu - a * t1) * (nu - 2 * a * t1 - a * n2)
                    - (1 - a) * (2 * t1 - 2) * (nu - a * t1 + 1 - a) - 2 * (1 - a) ** 2)
        if k is JoinKind.TVERTEX:
            return (nu - t1 - a * t1 - a * n2) * (nu + 2 - 2 * a - 2 * t1) - 2 * t1 * (1 - a) ** 2
        return (nu - t1 - a * t1) * (nu + 2 - 2 * a - 2 * t1 - a * n2) - 2 * t1 * (1 - a) ** 2

    def weight(self, nu):
        """Coefficient of the G2 coronal in the main factor."""
        a, t1, n1, m1 = self.alpha, self.t1, self.n1, self.m1
        k = self.kind
        if k is JoinKind.QEDGE:
            return m1 * (1 - a) ** 2 * (nu - a * t1)
        if k is JoinKind.TEDGE:
            # t1 * n1 / 2 == m1 for a regular graph
            return m1 * (1 - a) ** 2 * (nu - t1 - a * t1)
        return n1 * (1 - a) ** 2 * (nu + 2 - 2 * a - 2 * t1)


def factors_for(kind: JoinKind, g1: Graph, n2: int, alpha) -> JoinFactors:
    t1 = regularity(g1)
    if t1 is None:
        raise PreconditionError("the first factor must be regular")
    if t1 < 1 or g1.m < 1:
        raise PreconditionError("the first factor must have at least one edge")
    return JoinFactors(kind, alpha, g1.n, g1.m, t1, n2)


def nonperron_eigenvalues(g1: Graph, alpha: float, t1: int) -> np.ndarray:
    """A_alpha(G1) eigenvalues with exactly one copy of t1 removed."""
    vals = eigenvalues_sorted(alpha_matrix(g1, alpha))
    k = int(np.argmin(np.abs(vals - t1)))
    if abs(vals[k] - t1) > PERRON_TOL:
        raise InvalidInputError(
            f"no A_alpha eigenvalue within {PERRON_TOL} of the regularity {t1}; is G1 regular?"
        )
    return np.delete(vals, k)


def theorem_charpoly_eval(spec: JoinSpec, alpha: float, nu: float) -> float:
    """Right-hand side of the factorization at ``nu``; G2 may be arbitrary.

    The coronal is evaluated by a dense solve and the G1 product from the
    eigensolver, so nothing here builds the join itself.  Raises
    :class:`PoleError` when ``nu - alpha*s`` is an A_alpha(G2) eigenvalue.
    """
    check_alpha(alpha)
    f = factors_for(spec.kind, spec.g1, spec.n2, alpha)
    x = nu - alpha * f.shift
    if spec.n2:
        m2 = alpha_matrix(spec.g2, alpha)
        ups = coronal_numeric(m2, x)
        phi2 = float(np.prod(x - eigenvalues_sorted(m2)))
    else:
        ups, phi2 = 0.0, 1.0
    lam = nonperron_eigenvalues(spec.g1, alpha, f.t1)
    quad = float(np.prod([f.quad(nu, li) for li in lam]))
    base = nu - f.excess
    if base == 0 and f.m1 < f.n1:
        raise PoleError(f"nu={nu} is the excess eigenvalue with negative exponent", eigenvalue=nu)
    return base ** (f.m1 - f.n1) * phi2 * quad * (f.main(nu) - f.weight(nu) * ups)


# -- exact product form --------------------------------------------------------

def _matrix_poly_det(coeffs_in_lam: Poly, m) -> Fraction:
    """``det(c0 I + c1 M + c2 M^2 + ...)`` exactly."""
    n = len(m)
    acc = [[Fraction(0)] * n for _ in range(n)]
    power = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for k, c in enumerate(coeffs_in_lam.coeffs):
        if k:
            power = [[sum((power[i][l] * m[l][j] for l in range(n)), Fraction(0)) for j in range(n)]
                     for i in range(n)]
        if c:
            for i in range(n):
                for j in range(n):
                    acc[i][j] += c * power[i][j]
    return det_exact(acc)


def _interpolate(points: list[tuple[Fraction, Fraction]]) -> Poly:
    """Lagrange interpolation through exact points."""
    out = Poly()
    for i, (xi, yi) in enumerate(points):
        basis = Poly([Fraction(1)])
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j != i:
                basis = basis * Poly([-xj, Fraction(1)])
                denom *= xi - xj
        out = out + basis * (yi / denom)
    return out


def quad_product_exact(f: JoinFactors, g1: Graph) -> Poly:
    """``prod_{i>=2} quad(nu, lambda_i)`` as an exact polynomial in nu.

    The full product over all eigenvalues equals ``det(quad(nu0, A_alpha(G1)))``
    at any rational nu0; dividing by the Perron factor and interpolating at
    ``2 n1 - 1`` points recovers the degree ``2(n1 - 1)`` polynomial.
    """
    m = alpha_matrix_exact(g1, f.alpha)
    lam = Poly.x(Fraction(1))
    need = 2 * (f.n1 - 1) + 1
    points = []
    nu0 = Fraction(0)
    while len(points) < need:
        perron = f.quad(nu0, Fraction(f.t1))
        if perron != 0:
            points.append((nu0, _matrix_poly_det(f.quad(nu0, lam), m) / perron))
        nu0 += 1
    return _interpolate(points)


def theorem_charpoly_exact(spec: JoinSpec, alpha) -> Poly:
    """Expanded product form of the factorization over the rationals.

    The coronal term is cleared with ``phi_M(x) coronal_M(x) = phi_{M-J}(x) - phi_M(x)``
    so every piece stays polynomial.
    """
    alpha = Fraction(alpha)
    check_alpha(alpha)
    f = factors_for(spec.kind, spec.g1, spec.n2, alpha)
    nu = Poly.x(Fraction(1))
    m2 = alpha_matrix_exact(spec.g2, alpha)
    phi2 = charpoly_exact(m2)
    phi2_minus_j = charpoly_exact([[v - 1 for v in row] for row in m2])
    shift = alpha * f.shift
    phi2_x = phi2.shift(shift)
    adj_x = (phi2_minus_j - phi2).shift(shift)
    tail = f.main(nu) * phi2_x - f.weight(nu) * adj_x
    body = quad_product_exact(f, spec.g1) * tail
    excess = Poly([-f.excess, Fraction(1)])
    e = f.m1 - f.n1
    return body * excess ** e if e >= 0 else body.exact_div(excess ** (-e))
