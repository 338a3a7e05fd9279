"""Certify A_alpha-cospectral pairs and grow families from a cospectral seed.

Two routes produce new pairs:

* a pair of A_alpha-cospectral regular graphs with the same order, size and
  regularity, each joined with the same arbitrary H (:func:`generate_family`);
* a fixed regular G joined with two A_alpha-cospectral graphs H1, H2 whose
  A_alpha coronals agree (:func:`generate_coronal_family`).

All certification is numeric over a finite alpha grid.  That is evidence,
not proof, and every certificate says so.
"""

from __future__ import annotations

import collections
import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

import numpy as np

from .errors import InvalidInputError, PoleError, PreconditionError
from .graph import Graph, JoinKind, degrees, join, regularity, rook, shrikhande
from .linalg import charpoly_exact, coronal_numeric, eigenvalues_sorted
from .spectra import alpha_matrix, alpha_matrix_exact, check_alpha, spectra_equal

CERT_TOL = 1e-7
BASE_ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0)
NOTE = ("numeric agreement of A_alpha spectra on a finite alpha grid; "
        "this is evidence of cospectrality, not a proof")


class Evidence(enum.Enum):
    DEGREE_SEQUENCE_DIFFERS = "degree-sequence-differs"
    FINGERPRINT_DIFFERS = "adjacency-spectrum-same-but-canonical-forms-differ"
    UNVERIFIED = "unverified"


class SeedNotCertifiedError(PreconditionError):
    pass


def default_alpha_grid(random_draws: int = 3, seed: int = 0) -> list[float]:
    """``0, 1/4, 1/2, 3/4, 1`` plus ``random_draws`` seeded uniform values."""
    rng = np.random.default_rng(seed)
    return list(BASE_ALPHAS) + [float(x) for x in rng.uniform(0.0, 1.0, random_draws)]


def structural_fingerprint(g: Graph) -> tuple:
    """Isomorphism-invariant multiset of per-vertex local statistics.

    For each vertex: its degree, the number of K4s through it, and the
    triangles through it classified by the common-neighbour counts of their
    three edges.  Distinct fingerprints prove non-isomorphism; equal ones
    prove nothing.
    """
    a = g.adjacency().astype(np.int64)
    common = a @ a
    nbrs = g.neighbors()
    out = []
    for v in range(g.n):
        nv = sorted(nbrs[v])
        sub = a[np.ix_(nv, nv)]
        k4 = int(np.trace(sub @ sub @ sub)) // 6
        tri: collections.Counter = collections.Counter()
        for x in range(len(nv)):
            for y in range(x + 1, len(nv)):
                if sub[x, y]:
                    i, j = nv[x], nv[y]
                    tri[tuple(sorted((int(common[v, i]), int(common[v, j]), int(common[i, j]))))] += 1
        out.append((len(nv), k4, tuple(sorted(tri.items()))))
    return tuple(sorted(out))


def nonisomorphism_evidence(g_a: Graph, g_b: Graph) -> Evidence:
    if sorted(degrees(g_a)) != sorted(degrees(g_b)):
        return Evidence.DEGREE_SEQUENCE_DIFFERS
    if structural_fingerprint(g_a) != structural_fingerprint(g_b):
        return Evidence.FINGERPRINT_DIFFERS
    return Evidence.UNVERIFIED


@dataclass(frozen=True)
class CospectralCertificate:
    graph_pair: tuple[Graph, Graph]
    alphas_checked: tuple[float, ...]
    deviations: tuple[float, ...]
    max_deviation: float
    tol: float
    cospectral: bool
    nonisomorphic_evidence: Evidence
    reason: str = ""
    note: str = NOTE

    def __bool__(self) -> bool:
        return self.cospectral

    def to_dict(self) -> dict:
        g_a, g_b = self.graph_pair
        return {
            "cospectral": self.cospectral,
            "graph_a": {"n": g_a.n, "edges": [list(e) for e in g_a.edges]},
            "graph_b": {"n": g_b.n, "edges": [list(e) for e in g_b.edges]},
            "alphas_checked": list(self.alphas_checked),
            "deviations": list(self.deviations),
            "max_deviation": self.max_deviation,
            "tol": self.tol,
            "nonisomorphic_evidence": self.nonisomorphic_evidence.value,
            "reason": self.reason,
            "note": self.note,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def verify_cospectral(g_a: Graph, g_b: Graph, alphas: Optional[Iterable[float]] = None,
                      tol: float = CERT_TOL, method: str = "lapack") -> CospectralCertificate:
    """Compare A_alpha spectra of two graphs at every alpha in ``alphas``."""
    alphas = tuple(float(check_alpha(a)) for a in (default_alpha_grid() if alphas is None else alphas))
    if g_a.n != g_b.n:
        return CospectralCertificate((g_a, g_b), alphas, (), float("inf"), tol, False,
                                     Evidence.UNVERIFIED, f"order mismatch: {g_a.n} vs {g_b.n}")
    devs = []
    reason = ""
    for a in alphas:
        cmp = spectra_equal(eigenvalues_sorted(alpha_matrix(g_a, a), method=method),
                            eigenvalues_sorted(alpha_matrix(g_b, a), method=method), tol)
        devs.append(cmp.max_deviation)
        if not cmp.equal and not reason:
            reason = f"alpha={a}: {cmp.reason}"
    worst = max(devs, default=0.0)
    ok = worst <= tol
    evidence = nonisomorphism_evidence(g_a, g_b) if ok else Evidence.UNVERIFIED
    return CospectralCertificate((g_a, g_b), alphas, tuple(devs), worst, tol, ok, evidence, reason)


@dataclass(frozen=True)
class SeedPair:
    name: str
    g_a: Graph
    g_b: Graph
    claimed_regularity: int

    def __post_init__(self):
        for g in (self.g_a, self.g_b):
            if regularity(g) != self.claimed_regularity:
                raise InvalidInputError(f"seed {self.name!r}: graph is not {self.claimed_regularity}-regular")
        if (self.g_a.n, self.g_a.m) != (self.g_b.n, self.g_b.m):
            raise InvalidInputError(f"seed {self.name!r}: graphs differ in order or size")
        if self.g_a.m == 0:
            raise InvalidInputError(f"seed {self.name!r}: graphs need at least one edge")


def seed_catalog() -> dict[str, SeedPair]:
    return {"shrikhande-rook": SeedPair("shrikhande-rook", shrikhande(), rook(4), 6)}


def get_seed(name: str) -> SeedPair:
    catalog = seed_catalog()
    if name not in catalog:
        raise InvalidInputError(f"unknown seed {name!r}; known: {', '.join(sorted(catalog))}")
    return catalog[name]


@dataclass(frozen=True)
class FamilyMember:
    kind: JoinKind
    g_a: Graph
    g_b: Graph
    certificate: CospectralCertificate

    def to_dict(self) -> dict:
        return {"kind": self.kind.value, **self.certificate.to_dict()}


def _screen(g_a: Graph, g_b: Graph) -> str:
    if (g_a.n, g_a.m) != (g_b.n, g_b.m):
        return f"order/size differ: ({g_a.n},{g_a.m}) vs ({g_b.n},{g_b.m})"
    if sorted(degrees(g_a)) != sorted(degrees(g_b)):
        return "degree sequences differ"
    return ""


def _certify_members(pairs, alphas, tol, method) -> list[FamilyMember]:
    out = []
    for kind, g_a, g_b in pairs:
        problem = _screen(g_a, g_b)
        if problem:
            cert = CospectralCertificate((g_a, g_b), tuple(alphas), (), float("inf"), tol, False,
                                         Evidence.UNVERIFIED, problem)
        else:
            cert = verify_cospectral(g_a, g_b, alphas, tol, method)
        out.append(FamilyMember(kind, g_a, g_b, cert))
    return out


def _kinds(kinds) -> list[JoinKind]:
    return list(JoinKind) if kinds is None else [JoinKind.parse(k) for k in kinds]


def generate_family(seed: SeedPair, h: Graph, kinds: Optional[Sequence] = None,
                    alphas: Optional[Sequence[float]] = None, tol: float = CERT_TOL,
                    method: str = "lapack") -> list[FamilyMember]:
    """Join both seed graphs with ``h`` under each kind and certify the pairs.

    Raises :class:`SeedNotCertifiedError` when the seed itself is not
    A_alpha-cospectral over the grid.
    """
    alphas = list(default_alpha_grid() if alphas is None else alphas)
    seed_cert = verify_cospectral(seed.g_a, seed.g_b, alphas, tol, method)
    if not seed_cert.cospectral:
        raise SeedNotCertifiedError(
            f"seed {seed.name!r} is not A_alpha-cospectral (max deviation "
            f"{seed_cert.max_deviation:.3g}; {seed_cert.reason})"
        )
    pairs = [(k, join(k, seed.g_a, h), join(k, seed.g_b, h)) for k in _kinds(kinds)]
    return _certify_members(pairs, alphas, tol, method)


def coronals_agree(h1: Graph, h2: Graph, alpha: float, samples: int = 20, rng_seed: int = 0,
                   tol: float = 1e-8) -> bool:
    """Compare the A_alpha coronals of ``h1`` and ``h2`` at random non-pole points."""
    m1, m2 = alpha_matrix(h1, alpha), alpha_matrix(h2, alpha)
    ev = np.concatenate([eigenvalues_sorted(m1), eigenvalues_sorted(m2)])
    lo, hi = float(ev.min()) - 2.0, float(ev.max()) + 2.0
    rng = np.random.default_rng(rng_seed)
    done = 0
    while done < samples:
        nu = float(rng.uniform(lo, hi))
        if np.min(np.abs(ev - nu)) < 1e-3:
            continue
        try:
            u1, u2 = coronal_numeric(m1, nu), coronal_numeric(m2, nu)
        except PoleError:
            continue
        if abs(u1 - u2) > tol * max(1.0, abs(u1), abs(u2)):
            return False
        done += 1
    return True


def coronals_agree_exact(h1: Graph, h2: Graph, alpha) -> bool:
    """Exact coronal equality for rational alpha.

    ``coronal_M = phi_{M-J} / phi_M - 1``, so equality is the polynomial
    identity ``phi_{M1-J} phi_{M2} == phi_{M2-J} phi_{M1}``.
    """
    alpha = Fraction(alpha)
    m1, m2 = alpha_matrix_exact(h1, alpha), alpha_matrix_exact(h2, alpha)
    p1, p2 = charpoly_exact(m1), charpoly_exact(m2)
    q1 = charpoly_exact([[x - 1 for x in row] for row in m1])
    q2 = charpoly_exact([[x - 1 for x in row] for row in m2])
    return (q1 * p2).coeffs == (q2 * p1).coeffs


def generate_coronal_family(g: Graph, h1: Graph, h2: Graph, kinds: Optional[Sequence] = None,
                            alphas: Optional[Sequence[float]] = None, tol: float = CERT_TOL,
                            exact: bool = False, method: str = "lapack") -> list[FamilyMember]:
    """Join a fixed regular ``g`` with each of ``h1``, ``h2`` and certify the pairs.

    Requires ``h1``, ``h2`` A_alpha-cospectral with equal coronals at every
    grid alpha (checked at 20 random points, or exactly with ``exact=True``,
    where each alpha is taken at its exact binary value).
    """
    if regularity(g) is None or g.m == 0:
        raise PreconditionError("the fixed graph must be regular with at least one edge")
    alphas = list(default_alpha_grid() if alphas is None else alphas)
    cert = verify_cospectral(h1, h2, alphas, tol, method)
    if not cert.cospectral:
        raise SeedNotCertifiedError(f"H1 and H2 are not A_alpha-cospectral ({cert.reason})")
    for a in alphas:
        same = coronals_agree_exact(h1, h2, a) if exact else coronals_agree(h1, h2, a)
        if not same:
            raise SeedNotCertifiedError(f"H1 and H2 have different A_alpha coronals at alpha={a}")
    pairs = [(k, join(k, g, h1), join(k, g, h2)) for k in _kinds(kinds)]
    return _certify_members(pairs, alphas, tol, method)
