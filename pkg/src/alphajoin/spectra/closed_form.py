"""Closed-form A_alpha spectra of joins with regular G1 and regular or K_{a,b} G2.

The spectrum is assembled from the factor graphs' data alone: n1, m1, t1,
the A_alpha(G1) eigenvalues, and either (t2, A_alpha(G2) eigenvalues) or the
part sizes (a, b).  Each piece carries a clause tag of the form
``<kind>.<g2 class>.<item>``:

``excess``       eigenvalue of multiplicity m1 - n1
``p2-simple``    simple eigenvalue of the G1 = P2 case
``g2-shifted``   alpha*s + lambda_j(A_alpha(G2)), j >= 2
``part-a``       alpha*(s + a) with multiplicity b - 1 (``part-b`` symmetric)
``g1-quadratic`` two roots per non-Perron A_alpha(G1) eigenvalue
``cubic`` / ``quartic``  the remaining factor
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ..errors import InvalidInputError, PreconditionError, UnsupportedClassError
from ..graph import JoinKind
from ..linalg import Poly, Spectrum, eigenvalues_sorted, real_roots
from .matrix import alpha_matrix, check_alpha
from .joinspec import Arbitrary, CompleteBipartite, JoinSpec, Regular
from .theorems import JoinFactors

PERRON_TOL = 1e-6


@dataclass
class ClosedFormSpectrum:
    explicit: list[tuple[float, int, str]] = field(default_factory=list)
    factor_roots: list[tuple[Poly, int, str]] = field(default_factory=list)

    @property
    def dim(self) -> int:
        return sum(k for _, k, _ in self.explicit) + sum(p.degree * k for p, k, _ in self.factor_roots)

    def tagged_values(self) -> list[tuple[float, str]]:
        """Every eigenvalue (repeated by multiplicity) with its clause, non-increasing."""
        out = [(v, tag) for v, k, tag in self.explicit for _ in range(k)]
        for p, k, tag in self.factor_roots:
            roots = real_roots(p)
            out.extend((r, tag) for r in roots for _ in range(k))
        return sorted(out, key=lambda vt: -vt[0])

    def values(self) -> np.ndarray:
        return np.array([v for v, _ in self.tagged_values()])

    def flatten(self, cluster_tol: float = 1e-8) -> Spectrum:
        return Spectrum.from_values(self.values(), cluster_tol)

    def to_dict(self) -> dict:
        merged: list[dict] = []
        for v, tag in self.tagged_values():
            if merged and merged[-1]["clause"] == tag and abs(merged[-1]["value"] - v) <= 1e-8 * max(1.0, abs(v)):
                merged[-1]["multiplicity"] += 1
            else:
                merged.append({"value": float(v), "multiplicity": 1, "clause": tag})
        return {"eigenvalues": merged}


def _drop_one(vals: np.ndarray, target: float, what: str) -> np.ndarray:
    k = int(np.argmin(np.abs(vals - target)))
    if abs(vals[k] - target) > PERRON_TOL:
        raise InvalidInputError(f"{what}: no eigenvalue within {PERRON_TOL} of {target}")
    return np.delete(vals, k)


def _grouped(vals: np.ndarray, tol: float = 1e-8) -> list[tuple[float, int]]:
    return list(Spectrum.from_values(vals, tol).eigenvalues)


def closed_form_spectrum(spec: JoinSpec, alpha: float) -> ClosedFormSpectrum:
    """Assemble the A_alpha spectrum of ``spec``'s join from the factor data."""
    check_alpha(alpha)
    cls = spec.g2class
    if isinstance(cls, Arbitrary):
        raise UnsupportedClassError(
            "closed-form spectra need G2 regular or complete bipartite; "
            "use theorem_charpoly_eval for arbitrary G2"
        )
    g1 = spec.g1
    t1 = spec.t1
    n1, m1, n2 = g1.n, g1.m, spec.g2.n
    if t1 == 1 and (n1, m1) != (2, 1):
        raise PreconditionError("the t1 = 1 formulas assume G1 = P2; use theorem_charpoly_eval instead")
    kind = spec.kind
    a = float(alpha)
    f = JoinFactors(kind, a, n1, m1, t1, n2)
    s = f.shift
    nu = Poly.x(1.0)
    tag = f"{kind.value}.{'regular' if isinstance(cls, Regular) else 'bipartite'}."
    out = ClosedFormSpectrum()

    if t1 == 1:
        out.explicit.append((_p2_simple(kind, a, n2), 1, tag + "p2-simple"))
    else:
        out.explicit.append((f.excess, m1 - n1, tag + "excess"))
        lam1 = _drop_one(eigenvalues_sorted(alpha_matrix(g1, a)), t1, "A_alpha(G1)")
        for lam, k in _grouped(lam1):
            out.factor_roots.append((_g1_quadratic(kind, a, t1, n2, lam, nu), k, tag + "g1-quadratic"))

    if isinstance(cls, Regular):
        t2 = cls.t2
        lam2 = _drop_one(eigenvalues_sorted(alpha_matrix(spec.g2, a)), t2, "A_alpha(G2)")
        for lam, k in _grouped(lam2):
            out.explicit.append((a * s + lam, k, tag + "g2-shifted"))
        out.factor_roots.append((_regular_cubic(kind, a, n1, m1, t1, n2, t2, nu), 1, tag + "cubic"))
    else:
        pa, pb = cls.a, cls.b
        out.explicit.append((a * (s + pa), pb - 1, tag + "part-a"))
        out.explicit.append((a * (s + pb), pa - 1, tag + "part-b"))
        out.factor_roots.append((_bipartite_quartic(kind, a, n1, m1, t1, n2, pa, pb, nu), 1, tag + "quartic"))

    if out.dim != spec.dim:
        raise InvalidInputError(f"multiplicities sum to {out.dim}, expected {spec.dim}")
    return out


def _p2_simple(kind: JoinKind, a: float, n2: int) -> float:
    if kind is JoinKind.QVERTEX:
        return a * (1 + n2)
    if kind is JoinKind.QEDGE:
        return a
    if kind is JoinKind.TVERTEX:
        return a * (3 + n2) - 1
    return 3 * a - 1


def _g1_quadratic(kind: JoinKind, a, t1, n2, lam, nu):
    if kind is JoinKind.QVERTEX:
        return (nu * nu - (t1 - 2 + lam + a * (2 + t1 + n2)) * nu
                - 2 * a * (1 - a) * n2 - (1 - a * (1 + t1 + n2)) * (t1 + lam))
    if kind is JoinKind.QEDGE:
        return (nu * nu - (a * (t1 + n2 + 2) + t1 - 2 + lam) * nu
                + a * a * t1 * n2 + (a * (t1 + 1) - 1) * (t1 + lam))
    if kind is JoinKind.TVERTEX:
        return (nu * nu - (a * (t1 + n2 + 2) + t1 - 2 + 2 * lam) * nu
                - (1 - a) * (t1 - 2 * a * t1 + lam)
                + (a * t1 + a * n2 + lam) * (t1 - 2 + 2 * a + lam))
    return (nu * nu - (a * (t1 + n2 + 2) + t1 - 2 + 2 * lam) * nu
            - t1 * (1 - a) * (1 - 3 * a)
            + (a * t1 + lam) * (t1 - 3 + 3 * a + a * n2 + lam))


def _regular_cubic(kind: JoinKind, a, n1, m1, t1, n2, t2, nu):
    w = (1 - a) ** 2
    if t1 == 1:
        if kind is JoinKind.QVERTEX:
            return ((nu - 2 * a - t2) * (nu - a - a * n2) * (nu - 2 * a)
                    - 2 * n2 * w * (nu - 2 * a) - 2 * w * (nu - 2 * a - t2))
        if kind is JoinKind.QEDGE:
            return ((nu - a) * (nu - 2 * a - a * n2) * (nu - a - t2)
                    - 2 * w * (nu - a - t2) - w * (nu - a) * n2)
        if kind is JoinKind.TVERTEX:
            return ((nu - 2 * a) * (nu - 2 * a - t2) * (nu - 1 - a - a * n2)
                    - 2 * n2 * w * (nu - 2 * a) - 2 * w * (nu - 2 * a - t2))
        return ((nu - a - 1) * (nu - a - t2) * (nu - 2 * a - a * n2)
                - n2 * w * (nu - a - 1) - 2 * w * (nu - a - t2))
    if kind is JoinKind.QVERTEX:
        return ((nu - a * n1 - t2) * (nu - a * t1 - a * n2) * (nu + 2 - 2 * a - 2 * t1)
                - n1 * n2 * w * (nu + 2 - 2 * a - 2 * t1) - 2 * w * t1 * (nu - a * n1 - t2))
    if kind is JoinKind.QEDGE:
        return ((nu - a * t1) * (nu - 2 * a * t1 - a * n2) * (nu - a * m1 - t2)
                - 2 * (1 - a) * (t1 - 1) * (nu - a * t1 + 1 - a) * (nu - a * m1 - t2)
                - 2 * w * (nu - a * m1 - t2) - m1 * n2 * w * (nu - a * t1))
    if kind is JoinKind.TVERTEX:
        return ((nu - t2 - a * n1) * (nu - t1 - a * t1 - a * n2) * (nu + 2 - 2 * t1 - 2 * a)
                - 2 * t1 * w * (nu - a * n1 - t2) - n1 * n2 * w * (nu + 2 - 2 * t1 - 2 * a))
    return ((nu - t2 - a * m1) * (nu - t1 - a * t1) * (nu + 2 - 2 * t1 - 2 * a - a * n2)
            - 0.5 * t1 * n1 * n2 * w * (nu - a * t1 - t1) - 2 * t1 * w * (nu - t2 - a * m1))


def _bipartite_quartic(kind: JoinKind, a, n1, m1, t1, n2, pa, pb, nu):
    w = (1 - a) ** 2
    ab = pa * pb
    if t1 == 1:
        if kind is JoinKind.QVERTEX:
            return ((nu * nu - a * (3 + n2) * nu + 2 * a * a * n2 + 4 * a - 2)
                    * (nu * nu - a * (4 + n2) * nu + 4 * a * a + 2 * a * a * n2 + 2 * a * ab - ab)
                    - 2 * w * (nu - 2 * a) * ((nu - 2 * a) * n2 - a * n2 * n2 + 2 * ab))
        if kind is JoinKind.QEDGE:
            return ((nu * nu - a * (3 + n2) * nu + (a * a * n2 + 4 * a - 2))
                    * (nu * nu - a * (2 + n2) * nu + (a * a + a * a * n2 + 2 * a * ab - ab))
                    - w * (nu - a) * ((nu - a) * n2 - a * n2 * n2 + 2 * ab))
        if kind is JoinKind.TVERTEX:
            return ((nu * nu - (3 * a + a * n2 + 1) * nu + 2 * a * a * n2 + 6 * a - 2)
                    * (nu * nu - (4 * a + a * n2) * nu + 4 * a * a + 2 * a * a * n2 + 2 * a * ab - ab)
                    - 2 * w * (nu - 2 * a) * ((nu - 2 * a) * n2 - a * n2 * n2 + 2 * ab))
        return ((nu * nu - (1 + 3 * a + a * n2) * nu + a * a * n2 + a * n2 + 6 * a - 2)
                * (nu * nu - a * (2 + n2) * nu + a * a * (1 + n2) + 2 * a * ab - ab)
                - w * (nu - a - 1) * ((nu - a) * n2 - a * n2 * n2 + 2 * ab))
    if kind is JoinKind.QVERTEX:
        return ((nu * nu - (a * t1 + a * n2 + 2 * a + 2 * t1 - 2) * nu
                 + (2 * a * a * n2 + 2 * a * t1 * t1 + 2 * a * t1 * n2 + 2 * a * t1 - 2 * a * n2 - 2 * t1))
                * (nu * nu - a * (2 * n1 + n2) * nu + (a * a * n1 * n1 + a * a * n1 * n2 + 2 * a * ab - ab))
                - n1 * w * (nu + 2 - 2 * a - 2 * t1) * ((nu - a * n1) * n2 - a * n2 * n2 + 2 * ab))
    if kind is JoinKind.QEDGE:
        return ((nu * nu - (a * t1 + a * n2 + 2 * t1 - 2 + 2 * a) * nu
                 + (a * a * t1 * n2 + 2 * a * t1 * t1 + 2 * a * t1 - 2 * t1))
                * (nu * nu - (2 * a * m1 + a * n2) * nu + (a * a * m1 * m1 + a * a * m1 * n2 + 2 * a * ab - ab))
                - m1 * w * (nu - a * t1) * ((nu - a * m1) * n2 - a * n2 * n2 + 2 * ab))
    if kind is JoinKind.TVERTEX:
        return ((nu * nu - (a * t1 + a * n2 + 3 * t1 - 2 + 2 * a) * nu
                 + (2 * a * a * n2 + 2 * a * t1 * t1 + 2 * a * t1 * n2 + 4 * a * t1
                    - 2 * a * n2 + 2 * t1 * t1 - 4 * t1))
                * (nu * nu - (2 * a * n1 + a * n2) * nu + (a * a * n1 * n1 + a * a * n1 * n2 + 2 * a * ab - ab))
                - n1 * w * (nu + 2 - 2 * t1 - 2 * a) * ((nu - a * n1) * n2 - a * n2 * n2 + 2 * ab))
    return ((nu * nu - (a * (t1 + n2 + 2) + 3 * t1 - 2) * nu
             - 4 * t1 + 2 * t1 * t1 + 4 * a * t1 + a * t1 * n2 + 2 * a * t1 * t1 + a * a * t1 * n2)
            * (nu * nu - a * (2 * m1 + n2) * nu + a * a * m1 * (m1 + n2) + 2 * a * ab - ab)
            - 0.5 * t1 * n1 * w * (nu - t1 - a * t1) * ((nu - a * m1) * n2 - a * n2 * n2 + 2 * ab))
