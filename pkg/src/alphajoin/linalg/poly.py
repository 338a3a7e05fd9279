"""Univariate polynomials with ascending coefficients.

:class:`Poly` is agnostic to the coefficient type: ``float`` for numerics,
:class:`fractions.Fraction` for exact work.  Division needs a field, so
integer-only polynomials should be promoted to ``Fraction`` first.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Number
from typing import Iterable, Sequence

import numpy as np

from ..errors import InvalidInputError, NumericInconsistencyError


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def const(cls, c) -> "Poly":
        return cls([c])

    @classmethod
    def x(cls, one=1) -> "Poly":
        return cls([0 * one, one])

    @classmethod
    def linear(cls, root, lead=1) -> "Poly":
        """``lead * (x - root)``."""
        return cls([-lead * root, lead])

    @classmethod
    def from_roots(cls, roots: Iterable, one=1) -> "Poly":
        p = cls([one])
        for r in roots:
            p = p * cls([-r, one])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                terms.append(mono)
            elif mono and c == -1:
                terms.append(f"-{mono}")
            else:
                terms.append(f"{c}{'*' + mono if mono else ''}")
        return " + ".join(terms).replace("+ -", "- ")

    def __eq__(self, other):
        if isinstance(other, Number):
            other = Poly([other])
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    @staticmethod
    def _wrap(other) -> "Poly":
        return other if isinstance(other, Poly) else Poly([other])

    def __add__(self, other):
        other = self._wrap(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([a[k] + (b[k] if k < len(b) else 0) for k in range(len(a))])

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def __mul__(self, other):
        other = self._wrap(other)
        if not self.coeffs or not other.coeffs:
            return Poly()
        out = [0 * self.coeffs[0]] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative polynomial power")
        out = Poly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __divmod__(self, other):
        other = self._wrap(other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.lead
        if len(rem) - 1 < dq:
            return Poly(), Poly(rem)
        quot = [0] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            q = rem[k + dq] / lead
            quot[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - q * b
        return Poly(quot), Poly(rem[:dq])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other) -> "Poly":
        """Quotient, raising if the remainder is not exactly zero."""
        q, r = divmod(self, other)
        if not r.is_zero():
            raise InvalidInputError(f"{other} does not divide {self} exactly")
        return q

    def derivative(self, order: int = 1) -> "Poly":
        c = list(self.coeffs)
        for _ in range(order):
            c = [k * c[k] for k in range(1, len(c))]
        return Poly(c)

    def compose(self, inner: "Poly") -> "Poly":
        acc = Poly()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def shift(self, c) -> "Poly":
        """``x -> p(x - c)``."""
        return self.compose(Poly([-c, 1]))

    def monic(self) -> "Poly":
        return Poly([c / self.lead for c in self.coeffs])

    def to_float(self) -> "Poly":
        return Poly([float(c) for c in self.coeffs])

    def to_fraction(self) -> "Poly":
        return Poly([Fraction(c) for c in self.coeffs])

    def norm(self) -> float:
        """Largest absolute coefficient."""
        return max((abs(float(c)) for c in self.coeffs), default=0.0)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd; exact for ``Fraction`` coefficients."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def squarefree_decomposition(p: Poly) -> list[tuple[Poly, int]]:
    """Yun's algorithm over the rationals: ``p = lead * prod f_k^k``.

    Returns the non-constant factors ``(f_k, k)``.
    """
    p = p.to_fraction()
    out = []
    a = poly_gcd(p, p.derivative())
    b = p.exact_div(a)
    c = p.derivative().exact_div(a)
    d = c - b.derivative()
    k = 1
    while b.degree > 0:
        a = poly_gcd(b, d)
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        if a.degree > 0:
            out.append((a, k))
        k += 1
    return out


def _eval_scale(p: Poly, x: float) -> float:
    """Magnitude against which rounding in ``p(x)`` is measured."""
    return sum(abs(float(c)) * abs(x) ** k for k, c in enumerate(p.coeffs))


def _quadratic_roots(c0: float, c1: float, c2: float) -> list[float]:
    b = c1 / c2
    c = c0 / c2
    disc = b * b - 4.0 * c
    scale = max(b * b, abs(4.0 * c), 1.0)
    if disc < -1e-12 * scale:
        raise NumericInconsistencyError(
            f"quadratic x^2 + {b}x + {c} has complex roots (discriminant {disc:.3e})"
        )
    if disc <= 64 * np.finfo(float).eps * scale:
        return [-b / 2.0, -b / 2.0]
    # larger-magnitude root first, the other from the product of roots
    sq = math.sqrt(disc)
    r1 = -(b + math.copysign(sq, b)) / 2.0
    r2 = c / r1
    return sorted([r1, r2], reverse=True)


def _newton(p: Poly, dp: Poly, x: float, steps: int = 3) -> float:
    for _ in range(steps):
        d = dp(x)
        if d == 0:
            break
        step = p(x) / d
        x_new = x - step
        if abs(p(x_new)) > abs(p(x)):
            break
        x = x_new
    return x


def _companion_eigs(c: Sequence[float]) -> np.ndarray:
    """Eigenvalues of the (balanced by LAPACK) companion matrix."""
    n = len(c) - 1
    comp = np.zeros((n, n))
    comp[1:, :-1] = np.eye(n - 1)
    comp[:, -1] = -np.asarray(c[:-1]) / c[-1]
    return np.linalg.eigvals(comp)


def real_roots(p: Poly, imag_tol: float = 1e-8, residual_tol: float = 1e-7) -> list[float]:
    """All roots of a real-rooted polynomial of degree 1-4, with multiplicity.

    Degree 2 uses the quadratic formula.  Degrees 3-4 use companion-matrix
    eigenvalues followed by a Newton polish.  Clusters of nearly equal
    eigenvalues are tested as a genuine multiple root (a root of
    multiplicity k is a simple root of the (k-1)-th derivative) before
    being accepted, since companion eigenvalues only resolve a k-fold root
    to about ``eps**(1/k)``.

    Raises :class:`NumericInconsistencyError` if a root has a
    non-negligible imaginary part or fails the residual check.
    """
    p = p.to_float()
    deg = p.degree
    if deg < 1 or deg > 4:
        raise InvalidInputError(f"real_roots handles degree 1-4, got {deg}")
    c = p.coeffs
    if deg == 1:
        roots = [-c[0] / c[1]]
    elif deg == 2:
        roots = _quadratic_roots(*c)
    else:
        roots = _higher_roots(p, imag_tol)
    pn = Poly([x / p.norm() for x in c])
    for r in roots:
        scale = sum(abs(x) * abs(r) ** k for k, x in enumerate(pn.coeffs))
        if abs(pn(r)) > residual_tol * max(1.0, scale):
            raise NumericInconsistencyError(f"root {r} of {p} fails the residual check")
    return sorted(roots, reverse=True)


def _higher_roots(p: Poly, imag_tol: float) -> list[float]:
    raw = sorted(_companion_eigs(p.coeffs), key=lambda z: z.real)
    scale = max(1.0, max(abs(z) for z in raw))
    # group eigenvalues that could be one multiple root
    clusters: list[list[complex]] = [[raw[0]]]
    for z in raw[1:]:
        if abs(z - clusters[-1][-1]) <= 2e-3 * scale:
            clusters[-1].append(z)
        else:
            clusters.append([z])
    dp = p.derivative()
    roots: list[float] = []
    for cl in clusters:
        k = len(cl)
        if k > 1:
            centre = float(np.mean([z.real for z in cl]))
            dk = p.derivative(k - 1)
            r = _newton(dk, dk.derivative(), centre, steps=8)
            lower_ok = all(
                abs(p.derivative(j)(r)) <= 1e-12 * max(_eval_scale(p.derivative(j), r), 1e-300)
                for j in range(k - 1)
            )
            if lower_ok:
                roots.extend([r] * k)
                continue
        for z in cl:
            if abs(z.imag) > imag_tol * max(1.0, abs(z)):
                raise NumericInconsistencyError(
                    f"root {z} of {p} has imaginary part {z.imag:.3e}; polynomial is not real-rooted"
                )
            roots.append(_newton(p, dp, z.real))
    return roots
