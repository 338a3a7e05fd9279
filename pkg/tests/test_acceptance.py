"""End-to-end acceptance checks, one test per criterion, each at its stated tolerance."""

import time
from fractions import Fraction

import numpy as np

from alphajoin.cospectral import CERT_TOL, Evidence, default_alpha_grid, generate_family, get_seed
from alphajoin.graph import JoinKind, complete, complete_bipartite, cycle, degrees, join, path, regularity
from alphajoin.linalg import charpoly_exact
from alphajoin.spectra import (
    Arbitrary,
    CompleteBipartite,
    JoinSpec,
    Regular,
    alpha_matrix,
    alpha_matrix_exact,
    closed_form_spectrum,
    direct_join_spectrum,
    flat_values,
    spectra_equal,
    theorem_charpoly_eval,
    theorem_charpoly_exact,
)
from alphajoin.verify import (
    GRID_ALPHAS,
    GRID_G1,
    GRID_G2_BIPARTITE,
    GRID_G2_REGULAR,
    random_arbitrary,
    random_regular,
    suite_lemmas,
    theorem_grid,
)

EXAMPLE_1 = [5.632, 3.790, 3.5, 3.5, 3.5, 2, 2, 2, 2, 2, 2, 1.077]
EXAMPLE_2 = [6.336, 4.681, 4, 4, 4, 3, 3, 2.5, 2.5, 2.5, 2, 2, 2, 1.484]


def _example(acceptance, number, g2, g2class, printed):
    start = time.perf_counter()
    spec = JoinSpec(JoinKind.QVERTEX, complete(4), g2, g2class)
    direct = direct_join_spectrum(spec, 0.5)
    closed = closed_form_spectrum(spec, 0.5)
    elapsed = time.perf_counter() - start
    want = np.array(printed, dtype=float)
    dev_direct = float(np.max(np.abs(flat_values(direct) - want)))
    dev_closed = float(np.max(np.abs(flat_values(closed) - want)))
    agree = spectra_equal(closed, direct, 1e-8)
    ok = dev_direct <= 1e-3 and dev_closed <= 1e-3 and agree.equal and elapsed < 1.0
    acceptance(number, ok, f"direct vs printed {dev_direct:.2e}, closed vs printed {dev_closed:.2e} (tol 1e-3); "
                           f"closed vs direct {agree.max_deviation:.2e} (tol 1e-8); {elapsed:.3f}s (< 1s)")
    assert ok


def test_criterion_1_example_1(acceptance):
    _example(acceptance, 1, path(2), Regular(1), EXAMPLE_1)


def test_criterion_2_example_2(acceptance):
    _example(acceptance, 2, complete_bipartite(2, 2), CompleteBipartite(2, 2), EXAMPLE_2)


def test_criterion_3_grid(acceptance):
    start = time.perf_counter()
    cases = failures = 0
    worst = 0.0
    first = ""
    for kind, d1, d2, spec, alpha in theorem_grid():
        cmp = spectra_equal(closed_form_spectrum(spec, alpha), direct_join_spectrum(spec, alpha), 1e-7)
        cases += 1
        worst = max(worst, cmp.max_deviation)
        if not cmp.equal:
            failures += 1
            first = first or f"{kind.value} {d1} {d2} alpha={alpha}: {cmp.reason}"
    elapsed = time.perf_counter() - start
    n_g2 = len(GRID_G2_REGULAR) + len(GRID_G2_BIPARTITE)
    ok = (failures == 0 and cases >= 2000 and len(GRID_G1) >= 10 and n_g2 >= 10 and len(GRID_ALPHAS) == 5
          and elapsed < 300)
    acceptance(3, ok, f"{cases} cases (4 kinds x {len(GRID_G1)} G1 x {n_g2} G2 x {len(GRID_ALPHAS)} alpha), "
                      f"{failures} failures, max deviation {worst:.2e} (tol 1e-7); {elapsed:.1f}s (< 300s)"
                      + (f"; first failure {first}" if first else ""))
    assert ok


def test_criterion_4_general_g2(acceptance):
    rng = np.random.default_rng(2024)
    kinds = list(JoinKind)
    worst, configs, irregular, points = 0.0, 0, 0, 0
    while configs < 30:
        kind = kinds[configs % 4]
        g1 = random_regular(rng, 3, 8)
        g2 = random_arbitrary(rng)
        alpha = float(rng.uniform())
        spec = JoinSpec(kind, g1, g2, Arbitrary())
        m = alpha_matrix(join(kind, g1, g2), alpha)
        ev = np.linalg.eigvalsh(m)
        s = spec.m1 if kind.edge_join else spec.n1
        avoid = np.concatenate([ev, np.linalg.eigvalsh(alpha_matrix(g2, alpha)) + alpha * s])
        done = 0
        while done < 20:
            nu = float(rng.uniform(ev.min() - 3, ev.max() + 3))
            if np.min(np.abs(avoid - nu)) < 0.05:
                continue
            direct = float(np.linalg.det(nu * np.eye(spec.dim) - m))
            got = theorem_charpoly_eval(spec, alpha, nu)
            worst = max(worst, abs(got - direct) / max(abs(got), abs(direct)))
            done += 1
        configs += 1
        points += done
        irregular += regularity(g2) is None
    ok = worst <= 1e-6 and irregular > 0
    acceptance(4, ok, f"{configs} configurations x 20 nu = {points} points, {irregular} with irregular G2, "
                      f"max relative deviation {worst:.2e} (tol 1e-6)")
    assert ok


def test_criterion_5_identities(acceptance):
    rep = suite_lemmas(trials=100)
    exact = {"incidence-line-graph", "incidence-regular"}
    bad = [c.name for c in rep.checks
           if c.instances < 100 or c.max_deviation > (0.0 if c.name in exact else 1e-8)]
    ok = not bad and len(rep.checks) == 9 and all(c.tol == 0.0 for c in rep.checks if c.name in exact)
    worst = max(c.max_deviation for c in rep.checks)
    acceptance(5, ok, f"{len(rep.checks)} identities x >=100 instances, max deviation {worst:.2e} (tol 1e-8; "
                      f"integer identities exact)" + (f"; failing {bad}" if bad else ""))
    assert ok


def test_criterion_6_exact_identity(acceptance):
    spec = JoinSpec(JoinKind.QVERTEX, complete(3), cycle(3))
    alpha = Fraction(1, 3)
    direct = charpoly_exact(alpha_matrix_exact(join(spec.kind, spec.g1, spec.g2), alpha))
    product = theorem_charpoly_exact(spec, alpha)
    ok = direct.coeffs == product.coeffs and all(isinstance(c, Fraction) for c in product.coeffs)
    acceptance(6, ok, f"degree {len(direct.coeffs) - 1}, coefficients identical over Q: {ok}")
    assert ok


def test_criterion_7_cospectral_family(acceptance):
    alphas = default_alpha_grid()
    family = generate_family(get_seed("shrikhande-rook"), path(2), alphas=alphas)
    worst = max(m.certificate.max_deviation for m in family)
    ok = (len(family) == 4 and {m.kind for m in family} == set(JoinKind)
          and all(m.certificate.cospectral and m.certificate.max_deviation <= CERT_TOL for m in family)
          and all(m.certificate.nonisomorphic_evidence is not Evidence.UNVERIFIED for m in family)
          and all(m.g_a.n == m.g_b.n == 66 for m in family))
    evidence = sorted({m.certificate.nonisomorphic_evidence.value for m in family})
    acceptance(7, ok, f"{len(family)} pairs on 66 vertices, {len(alphas)} alphas, max deviation {worst:.2e} "
                      f"(tol 1e-7), evidence {evidence}")
    assert ok


def test_criterion_8_endpoints(acceptance):
    seen = set()
    worst0 = worst1 = 0.0
    half_ok = True
    for kind, d1, d2, spec, _ in theorem_grid():
        if (kind, d1, d2) in seen:
            continue
        seen.add((kind, d1, d2))
        g = join(kind, spec.g1, spec.g2)
        a = g.adjacency()
        adj = np.linalg.eigvalsh(a.astype(float))
        deg = np.array(degrees(g), dtype=float)
        for engine in (direct_join_spectrum, closed_form_spectrum):
            worst0 = max(worst0, spectra_equal(engine(spec, 0.0), adj, 1e-7).max_deviation)
            worst1 = max(worst1, spectra_equal(engine(spec, 1.0), deg, 1e-7).max_deviation)
        d_plus_a = (np.diag(degrees(g)) + a).tolist()
        half = alpha_matrix_exact(g, Fraction(1, 2))
        half_ok &= [[2 * x for x in row] for row in half] == d_plus_a
        half_ok &= bool(np.array_equal(2 * alpha_matrix(g, 0.5), np.array(d_plus_a, dtype=float)))
    ok = worst0 <= 1e-7 and worst1 <= 1e-7 and half_ok
    acceptance(8, ok, f"{len(seen)} joins, oracle and closed form: alpha=0 vs adjacency {worst0:.2e}, "
                      f"alpha=1 vs degrees {worst1:.2e} "
                      f"(tol 1e-7), 2*A_1/2 == D+A exactly: {half_ok}")
    assert ok
