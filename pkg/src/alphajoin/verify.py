"""Verification suites: identities, factorizations, closed forms, worked examples.

Each suite returns a :class:`SuiteReport` listing every check with the number
of instances it covered and its worst deviation.  Random instances come from
``numpy.random.default_rng(seed)`` so reruns are identical.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional

import numpy as np

from .errors import PoleError
from .graph import (
    Graph,
    JoinKind,
    circulant,
    complete_bipartite,
    complete_bipartite_parts,
    degrees,
    incidence_matrix,
    join,
    line_graph,
    parse_family,
    regularity,
)
from .linalg import (
    coronal_kab,
    coronal_numeric,
    eigenvalues_sorted,
    kab_alpha_spectrum,
)
from .linalg.identities import (
    constant_row_sum_coronal_deviation,
    coronal_det_deviation,
    rank_one_det_deviation,
    shifted_ones_inverse_deviation,
)
from .spectra import (
    Arbitrary,
    CompleteBipartite,
    JoinSpec,
    Regular,
    alpha_matrix,
    closed_form_spectrum,
    direct_join_spectrum,
    flat_values,
    spectra_equal,
    theorem_charpoly_eval,
)

SUITES = ("lemmas", "theorems", "corollaries", "examples")

GRID_G1 = ["cycle:3", "cycle:4", "cycle:5", "cycle:6", "cycle:7", "cycle:8",
           "complete:3", "complete:4", "complete:5", "complete:6", "path:2", "petersen"]
GRID_G2_REGULAR = ["cycle:3", "cycle:4", "cycle:5", "cycle:6", "complete:2", "complete:3",
                   "complete:4", "empty:1", "empty:2", "empty:3"]
GRID_G2_BIPARTITE = [f"complete_bipartite:{a},{b}" for a in range(1, 5) for b in range(a, 5)]
GRID_ALPHAS = (0.0, 0.25, 0.5, 0.75, 1.0)

EXAMPLE_1 = [5.632, 3.790, 3.5, 3.5, 3.5, 2, 2, 2, 2, 2, 2, 1.077]
EXAMPLE_2 = [6.336, 4.681, 4, 4, 4, 3, 3, 2.5, 2.5, 2.5, 2, 2, 2, 1.484]


@dataclass
class CheckResult:
    name: str
    instances: int
    max_deviation: float
    tol: float
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "instances": self.instances,
            "max_deviation": self.max_deviation,
            "tol": self.tol,
            "passed": self.passed,
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    suite: str
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "passed": self.passed, "checks": [c.to_dict() for c in self.checks]}

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            line = f"{mark} {self.suite}/{c.name}: {c.instances} instances, max deviation {c.max_deviation:.3e} (tol {c.tol:g})"
            if c.detail:
                line += f" -- {c.detail}"
            out.append(line)
        return out


class _Tracker:
    """Accumulates deviations for one check; remembers the first failure."""

    def __init__(self, name: str, tol: float):
        self.name, self.tol = name, tol
        self.count, self.worst, self.detail = 0, 0.0, ""
        self.start = time.perf_counter()

    def add(self, dev: float, what: str = "") -> None:
        self.count += 1
        if np.isnan(dev) or dev > self.worst:
            self.worst = dev
        if not dev <= self.tol and not self.detail:
            self.detail = what

    def result(self) -> CheckResult:
        ok = self.count > 0 and self.worst <= self.tol
        return CheckResult(self.name, self.count, self.worst, self.tol, ok,
                           "" if ok else (self.detail or "no instances"),
                           time.perf_counter() - self.start)


def _rel(x: float, y: float) -> float:
    scale = max(abs(x), abs(y))
    return 0.0 if scale == 0 else abs(x - y) / scale


# -- random instances ----------------------------------------------------------

def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    iu = np.triu_indices(n, 1)
    keep = rng.random(iu[0].size) < p
    return Graph(n, list(zip(iu[0][keep].tolist(), iu[1][keep].tolist())))


def random_regular(rng: np.random.Generator, n_min: int = 3, n_max: int = 10) -> Graph:
    """Random circulant with at least one edge (always regular)."""
    n = int(rng.integers(n_min, n_max + 1))
    k = int(rng.integers(1, n // 2 + 1))
    jumps = rng.choice(np.arange(1, n // 2 + 1), size=k, replace=False)
    return circulant(n, jumps.tolist())


def random_arbitrary(rng: np.random.Generator, n_min: int = 2, n_max: int = 7) -> Graph:
    """Random graph that is neither regular nor complete bipartite."""
    while True:
        g = random_graph(rng, int(rng.integers(n_min, n_max + 1)), float(rng.uniform(0.2, 0.8)))
        if regularity(g) is None and complete_bipartite_parts(g) is None:
            return g


def _random_symmetric(rng: np.random.Generator, n: int) -> np.ndarray:
    a = rng.normal(size=(n, n))
    return (a + a.T) / 2


# -- lemma suite ---------------------------------------------------------------

def suite_lemmas(trials: int = 100, seed: int = 0, tol: float = 1e-8) -> SuiteReport:
    rng = np.random.default_rng(seed)
    rep = SuiteReport("lemmas")

    t = _Tracker("rank-one-determinant", tol)
    for _ in range(trials):
        n = int(rng.integers(1, 7))
        m = rng.normal(size=(n, n))
        b = float(rng.normal())
        t.add(rank_one_det_deviation(m, b), f"n={n} b={b}")
    rep.checks.append(t.result())

    t = _Tracker("coronal-determinant", tol)
    while t.count < trials:
        n = int(rng.integers(1, 7))
        m = _random_symmetric(rng, n)
        nu, b = float(rng.normal(scale=3)), float(rng.normal())
        if np.min(np.abs(np.linalg.eigvalsh(m) - nu)) < 1e-2:
            continue
        t.add(coronal_det_deviation(m, b, nu), f"n={n} b={b} nu={nu}")
    rep.checks.append(t.result())

    t = _Tracker("shifted-ones-inverse", tol)
    while t.count < trials:
        n = int(rng.integers(1, 8))
        b, c = float(rng.uniform(-5, 5)), float(rng.uniform(-5, 5))
        if abs(b) < 1e-2 or abs(b - n * c) < 1e-2:
            continue
        t.add(shifted_ones_inverse_deviation(n, b, c), f"n={n} b={b} c={c}")
    rep.checks.append(t.result())

    t = _Tracker("constant-row-sum-coronal", tol)
    while t.count < trials:
        n = int(rng.integers(1, 8))
        s = _random_symmetric(rng, n)
        row_t = float(rng.normal(scale=2))
        m = s - np.diag(s.sum(axis=1)) + row_t * np.eye(n)
        nu = float(rng.normal(scale=4))
        if np.min(np.abs(np.linalg.eigvalsh(m) - nu)) < 1e-2:
            continue
        t.add(constant_row_sum_coronal_deviation(m, nu), f"n={n} nu={nu}")
    rep.checks.append(t.result())

    t = _Tracker("complete-bipartite-spectrum", tol)
    for _ in range(trials):
        a, b = sorted(int(x) for x in rng.integers(1, 7, size=2))
        alpha = float(rng.uniform())
        got = eigenvalues_sorted(alpha_matrix(complete_bipartite(a, b), alpha))
        want = np.array(kab_alpha_spectrum(a, b, alpha))
        t.add(float(np.max(np.abs(got - want))) / max(1.0, float(np.max(np.abs(want)))), f"K_{a},{b} alpha={alpha}")
    rep.checks.append(t.result())

    t = _Tracker("complete-bipartite-coronal", tol)
    while t.count < trials:
        a, b = sorted(int(x) for x in rng.integers(1, 7, size=2))
        alpha, nu = float(rng.uniform()), float(rng.uniform(-6, 12))
        m = alpha_matrix(complete_bipartite(a, b), alpha)
        if np.min(np.abs(np.linalg.eigvalsh(m) - nu)) < 1e-2:
            continue
        try:
            closed = coronal_kab(a, b, alpha, nu)
        except PoleError:
            continue
        t.add(_rel(closed, coronal_numeric(m, nu)), f"K_{a},{b} alpha={alpha} nu={nu}")
    rep.checks.append(t.result())

    t = _Tracker("incidence-line-graph", 0.0)
    for _ in range(trials):
        g = random_graph(rng, int(rng.integers(1, 10)), float(rng.uniform(0.1, 0.9)))
        r = incidence_matrix(g).astype(np.int64)
        lhs = r.T @ r - line_graph(g).adjacency().astype(np.int64)
        t.add(float(np.max(np.abs(lhs - 2 * np.eye(g.m, dtype=np.int64)), initial=0)), f"n={g.n} m={g.m}")
    rep.checks.append(t.result())

    t = _Tracker("incidence-regular", 0.0)
    for _ in range(trials):
        g = random_regular(rng, 2, 12)
        r = incidence_matrix(g).astype(np.int64)
        lhs = r @ r.T - g.adjacency().astype(np.int64)
        t.add(float(np.max(np.abs(lhs - regularity(g) * np.eye(g.n, dtype=np.int64)))), f"n={g.n}")
    rep.checks.append(t.result())

    t = _Tracker("line-graph-charpoly", tol)
    while t.count < trials:
        g = random_regular(rng, 3, 10)
        tg, n, m = regularity(g), g.n, g.m
        lam_l = np.linalg.eigvalsh(line_graph(g).adjacency().astype(float))
        lam_g = np.linalg.eigvalsh(g.adjacency().astype(float))
        nu = float(rng.uniform(-4, 2 * tg + 2))
        if np.min(np.abs(lam_l - nu)) < 1e-2 or abs(nu + 2) < 1e-2:
            continue
        lhs = float(np.prod(nu - lam_l))
        rhs = (nu + 2) ** (m - n) * float(np.prod(nu - tg + 2 - lam_g))
        t.add(_rel(lhs, rhs), f"circulant n={n} t={tg} nu={nu}")
    rep.checks.append(t.result())
    return rep


# -- theorem suite -------------------------------------------------------------

def _random_g2(rng: np.random.Generator, cls: str) -> Graph:
    if cls == "regular":
        n = int(rng.integers(1, 7))
        return circulant(n, [1]) if n >= 3 and rng.random() < 0.7 else parse_family(
            rng.choice([f"complete:{n}", f"empty:{n}"]))
    if cls == "bipartite":
        a, b = sorted(int(x) for x in rng.integers(1, 5, size=2))
        return parse_family(f"complete_bipartite:{a},{b}")
    return random_arbitrary(rng)


def theorem_point_deviations(spec: JoinSpec, alpha: float, points: int,
                             rng: np.random.Generator) -> list[float]:
    """Relative gaps between the factorization and ``det(nu I - A_alpha)`` at random nu."""
    a_join = alpha_matrix(join(spec.kind, spec.g1, spec.g2), alpha)
    ev = np.linalg.eigvalsh(a_join)
    s = spec.m1 if spec.kind.edge_join else spec.n1
    poles = np.linalg.eigvalsh(alpha_matrix(spec.g2, alpha)) + alpha * s if spec.n2 else np.array([])
    avoid = np.concatenate([ev, poles])
    lo, hi = float(ev.min()) - 3.0, float(ev.max()) + 3.0
    out = []
    while len(out) < points:
        nu = float(rng.uniform(lo, hi))
        if np.min(np.abs(avoid - nu)) < 0.05:
            continue
        direct = float(np.linalg.det(nu * np.eye(spec.dim) - a_join))
        out.append(_rel(theorem_charpoly_eval(spec, alpha, nu), direct))
    return out


def suite_theorems(trials: int = 30, g2: str = "arbitrary", seed: int = 0, points: int = 20,
                   tol: float = 1e-6) -> SuiteReport:
    if g2 not in ("arbitrary", "regular", "bipartite"):
        raise ValueError(f"unknown G2 class {g2!r}")
    rng = np.random.default_rng(seed)
    rep = SuiteReport("theorems")
    kinds = list(JoinKind)
    for kind in kinds:
        t = _Tracker(f"{kind.value}-charpoly-{g2}", tol)
        for _ in range(trials):
            g1 = random_regular(rng, 3, 8) if rng.random() < 0.85 else parse_family("path:2")
            h = _random_g2(rng, g2)
            alpha = float(rng.choice([0.0, 1.0])) if rng.random() < 0.15 else float(rng.uniform())
            spec = JoinSpec(kind, g1, h, Arbitrary())
            for dev in theorem_point_deviations(spec, alpha, points, rng):
                t.add(dev, f"g1(n={g1.n},m={g1.m}) g2(n={h.n},m={h.m}) alpha={alpha}")
        rep.checks.append(t.result())
    return rep


# -- corollary grid ------------------------------------------------------------

def theorem_grid() -> Iterator[tuple[JoinKind, str, str, JoinSpec, float]]:
    """Every (kind, G1, G2, alpha) case of the agreement grid."""
    g1s = [(d, parse_family(d)) for d in GRID_G1]
    g2s = ([(d, parse_family(d), "regular") for d in GRID_G2_REGULAR]
           + [(d, parse_family(d), "bipartite") for d in GRID_G2_BIPARTITE])
    for kind in JoinKind:
        for d1, g1 in g1s:
            for d2, g2, cls in g2s:
                if cls == "regular":
                    gcls = Regular(regularity(g2))
                else:
                    gcls = CompleteBipartite(*complete_bipartite_parts(g2))
                spec = JoinSpec(kind, g1, g2, gcls)
                for alpha in GRID_ALPHAS:
                    yield kind, d1, d2, spec, alpha


def suite_corollaries(tol: float = 1e-7, method: str = "lapack",
                      progress: Optional[Callable[[int], None]] = None) -> SuiteReport:
    rep = SuiteReport("corollaries")
    agree = _Tracker("closed-form-vs-direct", tol)
    ledger = _Tracker("multiplicity-total", 0.0)
    adj0 = _Tracker("alpha0-adjacency-spectrum", tol)
    deg1 = _Tracker("alpha1-degree-multiset", tol)
    half = _Tracker("half-signless-laplacian", 0.0)
    for i, (kind, d1, d2, spec, alpha) in enumerate(theorem_grid()):
        what = f"{kind.value} g1={d1} g2={d2} alpha={alpha}"
        cf = closed_form_spectrum(spec, alpha)
        ledger.add(float(abs(cf.dim - spec.dim)), what)
        cmp = spectra_equal(cf, direct_join_spectrum(spec, alpha, method=method), tol)
        agree.add(cmp.max_deviation, f"{what}: {cmp.reason}")
        if alpha == 0.0:
            a = join(spec.kind, spec.g1, spec.g2).adjacency().astype(float)
            adj0.add(spectra_equal(cf, np.linalg.eigvalsh(a), tol).max_deviation, what)
            twice = 2 * alpha_matrix(join(spec.kind, spec.g1, spec.g2), 0.5)
            lap = np.diag(a.sum(axis=1)) + a
            half.add(float(np.max(np.abs(twice - lap))), what)
        elif alpha == 1.0:
            degs = degrees(join(spec.kind, spec.g1, spec.g2))
            deg1.add(spectra_equal(cf, np.array(degs, dtype=float), tol).max_deviation, what)
        if progress:
            progress(i)
    rep.checks += [agree.result(), ledger.result(), adj0.result(), deg1.result(), half.result()]
    return rep


# -- worked examples -----------------------------------------------------------

def example_specs() -> list[tuple[str, JoinSpec, list[float]]]:
    k4 = parse_family("complete:4")
    return [
        ("example-1", JoinSpec(JoinKind.QVERTEX, k4, parse_family("path:2"), Regular(1)), EXAMPLE_1),
        ("example-2", JoinSpec(JoinKind.QVERTEX, k4, parse_family("complete_bipartite:2,2"),
                               CompleteBipartite(2, 2)), EXAMPLE_2),
    ]


def suite_examples(printed_tol: float = 1e-3, agree_tol: float = 1e-8) -> SuiteReport:
    rep = SuiteReport("examples")
    for name, spec, printed in example_specs():
        want = np.sort(np.array(printed, dtype=float))[::-1]
        direct = direct_join_spectrum(spec, 0.5)
        closed = closed_form_spectrum(spec, 0.5)
        for label, got in (("direct", direct), ("closed-form", closed)):
            t = _Tracker(f"{name}-{label}-vs-printed", printed_tol)
            vals = flat_values(got)
            dev = float(np.max(np.abs(vals - want))) if vals.size == want.size else float("inf")
            t.add(dev, f"got {np.round(vals, 4).tolist()}")
            rep.checks.append(t.result())
        t = _Tracker(f"{name}-closed-form-vs-direct", agree_tol)
        cmp = spectra_equal(closed, direct, agree_tol)
        t.add(cmp.max_deviation, cmp.reason)
        rep.checks.append(t.result())
    return rep


def run_suite(name: str, trials: Optional[int] = None, g2: str = "arbitrary", seed: int = 0,
              method: str = "lapack") -> SuiteReport:
    if name == "lemmas":
        return suite_lemmas(trials or 100, seed)
    if name == "theorems":
        return suite_theorems(trials or 30, g2, seed)
    if name == "corollaries":
        return suite_corollaries(method=method)
    if name == "examples":
        return suite_examples()
    raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
