"""Exact rational matrix arithmetic on lists of :class:`~fractions.Fraction`."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import InvalidInputError
from .poly import Poly

Matrix = list[list[Fraction]]


def to_fraction_matrix(m) -> Matrix:
    """Convert any 2-D array of ints, floats or fractions; floats convert exactly."""
    rows = [[Fraction(x) if not isinstance(x, float) else Fraction.from_float(x) for x in row] for row in m]
    _check_square(rows)
    return rows


def _check_square(a: Sequence[Sequence]) -> None:
    n = len(a)
    if any(len(row) != n for row in a):
        raise InvalidInputError("matrix must be square")


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def det_exact(m) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    a = [list(row) for row in to_fraction_matrix(m)]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        pk = a[k][k]
        det *= pk
        for i in range(k + 1, n):
            f = a[i][k] / pk
            if f:
                row_k = a[k]
                row_i = a[i]
                for j in range(k + 1, n):
                    row_i[j] -= f * row_k[j]
    return det


def charpoly_exact(m) -> Poly:
    """Monic characteristic polynomial ``det(xI - M)`` (Faddeev-LeVerrier).

    With ``N_0 = 0`` and ``c_n = 1``: ``N_k = M N_{k-1} + c_{n-k+1} I`` and
    ``c_{n-k} = -tr(M N_k) / k``.
    """
    a = to_fraction_matrix(m)
    n = len(a)
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    prod = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            prod[i][i] += c_prev
        prod = matmul(a, prod)
        coeffs[n - k] = -sum((prod[i][i] for i in range(n)), Fraction(0)) / k
    return Poly(coeffs)


def solve_exact(m, rhs: Sequence) -> list[Fraction]:
    """Solve ``M x = rhs`` exactly; raises ``ZeroDivisionError`` if singular."""
    a = [list(row) + [Fraction(r)] for row, r in zip(to_fraction_matrix(m), rhs)]
    n = len(a)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular system")
        a[k], a[piv] = a[piv], a[k]
        pk = a[k][k]
        for i in range(n):
            if i != k and a[i][k] != 0:
                f = a[i][k] / pk
                for j in range(k, n + 1):
                    a[i][j] -= f * a[k][j]
    return [a[i][n] / a[i][i] for i in range(n)]
