from fractions import Fraction
import itertools

import numpy as np
import pytest
from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from alphajoin.cospectral import verify_cospectral
from alphajoin.errors import PoleError, PreconditionError
from alphajoin.graph import (
    Graph,
    JoinKind,
    complete_bipartite,
    degrees,
    empty,
    incidence_matrix,
    join,
    line_graph,
    parse_edge_list,
    path,
    regularity,
    relabel,
    to_edge_list,
)
from alphajoin.linalg import (
    Poly,
    charpoly_exact,
    coronal_kab,
    coronal_numeric,
    eigenvalues_sorted,
    kab_alpha_spectrum,
    real_roots,
)
from alphajoin.spectra import (
    Arbitrary,
    JoinSpec,
    alpha_matrix,
    alpha_matrix_exact,
    closed_form_spectrum,
    direct_join_spectrum,
    spectra_equal,
    theorem_charpoly_eval,
)

SETTINGS = settings(max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@st.composite
def graphs(draw, n_min=1, n_max=8):
    n = draw(st.integers(n_min, n_max))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def circulants(draw, n_min=3, n_max=9):
    """Regular graphs with at least one edge."""
    n = draw(st.integers(n_min, n_max))
    return _circulant(n, draw(st.sets(st.integers(1, n // 2), min_size=1)))


@st.composite
def circulant_pairs(draw):
    """Two circulants on the same vertex count (regularities may differ)."""
    n = draw(st.integers(4, 10))
    return tuple(_circulant(n, draw(st.sets(st.integers(1, n // 2), min_size=1))) for _ in range(2))


def _circulant(n, jumps):
    return Graph(n, {tuple(sorted((i, (i + j) % n))) for i in range(n) for j in jumps})


# closed forms cover t1 >= 2 and G1 = P2
closed_form_g1 = circulants().filter(lambda g: regularity(g) >= 2) | st.just(path(2))
closed_form_g2 = (circulants(n_min=2, n_max=6) | st.builds(empty, st.integers(1, 3))
                  | st.builds(complete_bipartite, st.integers(1, 4), st.integers(1, 4)))
alphas = st.floats(0.0, 1.0, allow_nan=False)
rational_alphas = st.fractions(0, 1, max_denominator=12)
kinds = st.sampled_from(list(JoinKind))


# -- matrices and eigenvalues --------------------------------------------------

@SETTINGS
@given(graphs(), alphas)
def test_trace_and_frobenius_invariants(g, alpha):
    m = alpha_matrix(g, alpha)
    ev = eigenvalues_sorted(m)
    assert np.all(np.diff(ev) <= 0)
    assert ev.sum() == pytest.approx(alpha * sum(degrees(g)), abs=1e-9)
    assert np.sum(ev ** 2) == pytest.approx(np.sum(m * m), abs=1e-9)


@SETTINGS
@given(graphs(n_max=7), alphas)
def test_jacobi_agrees_with_lapack(g, alpha):
    m = alpha_matrix(g, alpha)
    assert np.allclose(eigenvalues_sorted(m, "jacobi"), eigenvalues_sorted(m), atol=1e-10)


@SETTINGS
@given(graphs(), alphas, st.data())
def test_spectrum_is_relabeling_invariant(g, alpha, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    h = relabel(g, perm)
    assert spectra_equal(eigenvalues_sorted(alpha_matrix(g, alpha)), eigenvalues_sorted(alpha_matrix(h, alpha)),
                         1e-10).equal


@SETTINGS
@given(graphs())
def test_endpoint_identities(g):
    a = g.adjacency().astype(float)
    assert np.allclose(eigenvalues_sorted(alpha_matrix(g, 0.0)), eigenvalues_sorted(a), atol=1e-12)
    assert np.allclose(eigenvalues_sorted(alpha_matrix(g, 1.0)), sorted(degrees(g), reverse=True), atol=0)
    half = alpha_matrix_exact(g, Fraction(1, 2))
    d_plus_a = np.diag(degrees(g)) + g.adjacency()
    assert [[2 * x for x in row] for row in half] == d_plus_a.tolist()


@SETTINGS
@given(graphs(n_max=6), rational_alphas)
def test_exact_charpoly_consistent(g, alpha):
    m = alpha_matrix_exact(g, alpha)
    p = charpoly_exact(m)
    assert p.coeffs[-1] == 1 and len(p.coeffs) == g.n + 1
    assert -p.coeffs[-2] == sum(m[i][i] for i in range(g.n))
    pf = p.to_float()
    ev = eigenvalues_sorted(alpha_matrix(g, float(alpha)))
    scale = max(1.0, max(abs(c) for c in pf.coeffs)) * max(1.0, float(np.max(np.abs(ev)))) ** g.n
    for lam in ev:
        assert abs(pf(lam)) <= 1e-8 * scale


# -- polynomials ---------------------------------------------------------------

@SETTINGS
@given(st.lists(st.integers(-6, 6), min_size=1, max_size=4))
def test_real_roots_inverts_from_roots(roots):
    got = real_roots(Poly.from_roots([float(r) for r in roots]))
    # a k-fold root is only determined to about eps^(1/k)
    assert got == pytest.approx(sorted(roots, reverse=True), abs=1e-4)


# -- coronals ------------------------------------------------------------------

@SETTINGS
@given(circulants(), alphas, st.floats(-20, 40, allow_nan=False))
def test_constant_row_sum_coronal(g, alpha, nu):
    t = regularity(g)
    m = alpha_matrix(g, alpha)
    assume(np.min(np.abs(eigenvalues_sorted(m) - nu)) > 1e-2)
    assert coronal_numeric(m, nu) == pytest.approx(g.n / (nu - t), rel=1e-8)


@SETTINGS
@given(st.integers(1, 6), st.integers(1, 6), alphas, st.floats(-10, 20, allow_nan=False))
def test_complete_bipartite_spectrum_and_coronal(a, b, alpha, nu):
    m = alpha_matrix(complete_bipartite(a, b), alpha)
    ev = eigenvalues_sorted(m)
    assert np.allclose(ev, kab_alpha_spectrum(a, b, alpha), atol=1e-9)
    assume(np.min(np.abs(ev - nu)) > 1e-2)
    assert coronal_kab(a, b, alpha, nu) == pytest.approx(coronal_numeric(m, nu), rel=1e-8)


# -- graphs and joins ----------------------------------------------------------

@SETTINGS
@given(graphs())
def test_edge_list_round_trip(g):
    assert parse_edge_list(to_edge_list(g)) == g


@SETTINGS
@given(graphs())
def test_incidence_line_graph_identity(g):
    r = incidence_matrix(g).astype(int)
    assert np.array_equal(r.T @ r, line_graph(g).adjacency() + 2 * np.eye(g.m, dtype=int))


@SETTINGS
@given(kinds, circulants(n_max=7), graphs(n_max=5))
def test_join_degree_blocks(kind, g1, g2):
    n1, m1, t1 = g1.n, g1.m, regularity(g1)
    d = degrees(join(kind, g1, g2))
    assert len(d) == n1 + m1 + g2.n
    own = 2 * t1 if kind.total else t1
    assert d[:n1] == [own + (0 if kind.edge_join else g2.n)] * n1
    assert d[n1:n1 + m1] == [2 * t1 + (g2.n if kind.edge_join else 0)] * m1
    assert d[n1 + m1:] == [x + (m1 if kind.edge_join else n1) for x in degrees(g2)]


# -- closed forms and theorems -------------------------------------------------

@SETTINGS
@given(kinds, closed_form_g1, closed_form_g2, alphas)
def test_closed_form_matches_oracle(kind, g1, g2, alpha):
    spec = JoinSpec(kind, g1, g2)
    cf = closed_form_spectrum(spec, alpha)
    assert cf.dim == spec.dim
    assert spectra_equal(cf, direct_join_spectrum(spec, alpha), 1e-7).equal


@SETTINGS
@given(kinds, st.integers(2, 6), alphas)
def test_closed_form_refuses_matchings_other_than_p2(kind, k, alpha):
    spec = JoinSpec(kind, _circulant(2 * k, {k}), path(2))
    with pytest.raises(PreconditionError):
        closed_form_spectrum(spec, alpha)


@settings(max_examples=40, deadline=None)
@given(kinds, circulants(n_max=6), graphs(n_max=5), alphas, st.floats(-5, 40, allow_nan=False))
def test_theorem_charpoly_matches_determinant(kind, g1, g2, alpha, nu):
    spec = JoinSpec(kind, g1, g2, Arbitrary())
    m = alpha_matrix(join(kind, g1, g2), alpha)
    direct = float(np.linalg.det(nu * np.eye(spec.dim) - m))
    try:
        got = theorem_charpoly_eval(spec, alpha, nu)
    except PoleError:
        assume(False)
    scale = max(abs(direct), float(np.prod(np.abs(nu - eigenvalues_sorted(m)) + 1e-300)))
    assert abs(got - direct) <= 1e-6 * max(scale, 1e-300) + 1e-9


@SETTINGS
@given(circulant_pairs())
def test_cospectrality_of_regular_pairs_follows_adjacency(pair):
    # regular graphs of equal degree: A_alpha cospectral iff adjacency cospectral
    g, h = pair
    assume(regularity(g) == regularity(h))
    at_zero = verify_cospectral(g, h, [0.0]).cospectral
    assert verify_cospectral(g, h, [0.0, 0.3, 0.8, 1.0]).cospectral == at_zero
