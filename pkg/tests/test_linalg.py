from fractions import Fraction

import numpy as np
import pytest

from alphajoin.errors import (
    ContractViolation,
    InvalidInputError,
    InvalidParameterError,
    LemmaPreconditionError,
    NumericInconsistencyError,
    PoleError,
)
from alphajoin.graph import complete, complete_bipartite, cycle, path, petersen
from alphajoin.linalg import (
    Poly,
    Spectrum,
    adjugate,
    as_symmetric,
    charpoly_exact,
    coronal_exact,
    coronal_kab,
    coronal_numeric,
    det_exact,
    eigenvalues_sorted,
    jacobi_eigenvalues,
    kab_alpha_spectrum,
    rank_one_identities_check,
    real_roots,
    shifted_ones_inverse,
    solve_exact,
    squarefree_decomposition,
    sym_eigenvalues,
)
from alphajoin.linalg.identities import coronal_det_deviation, rank_one_det_deviation
from alphajoin.spectra import alpha_matrix, alpha_matrix_exact


# -- eigensolver ---------------------------------------------------------------

def test_sym_eigenvalues_k4_half():
    s = sym_eigenvalues(alpha_matrix(complete(4), 0.5))
    assert len(s.eigenvalues) == 2
    (v1, k1), (v2, k2) = s.eigenvalues
    assert (k1, k2) == (1, 3)
    assert v1 == pytest.approx(3, abs=1e-12) and v2 == pytest.approx(1, abs=1e-12)


def test_sym_eigenvalues_zero_matrix():
    s = sym_eigenvalues(np.zeros((3, 3)))
    assert s.eigenvalues == ((0.0, 3),)


def test_sym_eigenvalues_c4():
    # nu^4 - 4 nu^2 by hand
    s = sym_eigenvalues(cycle(4).adjacency())
    vals = [v for v, _ in s.eigenvalues]
    assert [k for _, k in s.eigenvalues] == [1, 2, 1]
    assert np.allclose(vals, [2, 0, -2], atol=1e-12)


def test_non_symmetric_rejected():
    with pytest.raises(ContractViolation):
        sym_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ContractViolation):
        as_symmetric(np.ones((2, 3)))


@pytest.mark.parametrize("n", [1, 2, 5, 12, 30])
def test_jacobi_matches_lapack(n):
    rng = np.random.default_rng(n)
    a = rng.normal(size=(n, n))
    a = a + a.T
    got = eigenvalues_sorted(a, method="jacobi")
    want = np.sort(np.linalg.eigvalsh(a))[::-1]
    assert np.max(np.abs(got - want)) <= 1e-10 * max(1.0, np.linalg.norm(a, 2))


def test_jacobi_on_join_matrix():
    from alphajoin.graph import JoinKind, join
    m = alpha_matrix(join(JoinKind.TVERTEX, petersen(), path(3)), 0.3)
    got = eigenvalues_sorted(m, method="jacobi")
    want = eigenvalues_sorted(m)
    assert np.max(np.abs(got - want)) <= 1e-10 * np.linalg.norm(m, 2)


def test_unknown_method():
    with pytest.raises(ValueError):
        eigenvalues_sorted(np.eye(2), method="power")


def test_spectrum_clustering_and_flatten():
    s = Spectrum.from_values([1.0, 3.0, 1.0 + 1e-12, 1.0 - 1e-12], 1e-8)
    assert [k for _, k in s.eigenvalues] == [1, 3]
    assert s.dim == 4
    assert np.allclose(s.flatten(), [3, 1, 1, 1])
    assert s.to_dict()["eigenvalues"][1]["multiplicity"] == 3
    assert str(s) == "{3, [1]^3}"


# -- exact arithmetic ----------------------------------------------------------

def test_charpoly_exact_examples():
    assert charpoly_exact(complete(3).adjacency().tolist()).coeffs == (-2, -3, 0, 1)
    assert charpoly_exact([[1, 0], [0, 1]]).coeffs == (1, -2, 1)
    assert charpoly_exact(alpha_matrix_exact(path(2), Fraction(1, 2))).coeffs == (0, -1, 1)


def test_charpoly_exact_vanishes_at_eigenvalues():
    m = alpha_matrix_exact(petersen(), Fraction(1, 3))
    p = charpoly_exact(m).to_float()
    for lam in eigenvalues_sorted(alpha_matrix(petersen(), 1 / 3)):
        assert abs(p(lam)) <= 1e-6 * p.norm()


def test_det_and_solve_exact():
    m = [[2, 1], [1, 3]]
    assert det_exact(m) == 5
    assert solve_exact(m, [1, 1]) == [Fraction(2, 5), Fraction(1, 5)]
    assert det_exact([[1, 2], [2, 4]]) == 0


# -- polynomials ---------------------------------------------------------------

def test_poly_arithmetic():
    x = Poly.x()
    p = (x - 1) * (x + 2)
    assert p.coeffs == (-2, 1, 1)
    q, r = divmod(p.to_fraction(), Poly([Fraction(-1), Fraction(1)]))
    assert q.coeffs == (2, 1) and r.is_zero()
    assert p.derivative().coeffs == (1, 2)
    assert p.shift(1).coeffs == (-2, -1, 1)  # p(x - 1) = (x - 2)(x + 1)
    assert Poly.from_roots([1, 2, 3])(4) == 6
    with pytest.raises(InvalidInputError):
        (x * x + 1).to_fraction().exact_div(Poly([Fraction(-1), Fraction(1)]))


def test_real_roots_examples():
    assert real_roots(Poly([7, -5.5, 1])) == pytest.approx([3.5, 2.0])
    roots = real_roots(Poly([-23, 31.5, -10.5, 1]))
    assert roots == pytest.approx([5.632, 3.790, 1.077], abs=1e-3)
    assert real_roots(Poly([-1, 0, 1])) == pytest.approx([1, -1])
    assert real_roots(Poly([-3, 2])) == pytest.approx([1.5])


def test_real_roots_multiple():
    p = Poly.from_roots([2.0, 2.0, 2.0, -1.0])
    assert real_roots(p) == pytest.approx([2, 2, 2, -1], abs=1e-9)
    p = Poly.from_roots([0.5, 0.5, 3.0, 3.0])
    assert real_roots(p) == pytest.approx([3, 3, 0.5, 0.5], abs=1e-9)


def test_real_roots_complex_detected():
    with pytest.raises(NumericInconsistencyError):
        real_roots(Poly([1, 0, 1]))
    with pytest.raises(NumericInconsistencyError):
        real_roots(Poly([1, 0, 0, 0, 1]))


def test_real_roots_degree_range():
    with pytest.raises(InvalidInputError):
        real_roots(Poly.from_roots([1, 2, 3, 4, 5]))
    with pytest.raises(InvalidInputError):
        real_roots(Poly([3]))


def test_squarefree_decomposition():
    x = Poly.x(Fraction(1))
    p = (x - 1) ** 3 * (x + 2) ** 2 * (x - 5)
    parts = squarefree_decomposition(p)
    rebuilt = Poly([Fraction(1)])
    for f, k in parts:
        rebuilt = rebuilt * f ** k
    assert rebuilt.monic() == p.monic()
    assert {k for _, k in parts} == {1, 2, 3}


# -- coronal -------------------------------------------------------------------

def test_coronal_examples():
    assert coronal_numeric(cycle(4).adjacency(), 3.0) == pytest.approx(4.0)
    assert coronal_numeric(np.zeros((1, 1)), 2.0) == pytest.approx(0.5)
    m = alpha_matrix(complete_bipartite(2, 3), 0.0)
    assert coronal_numeric(m, 3.0) == pytest.approx(9.0)
    assert coronal_exact(cycle(4).adjacency().tolist(), 3) == 4


def test_coronal_pole():
    with pytest.raises(PoleError) as err:
        coronal_numeric(cycle(4).adjacency(), 2.0)
    assert err.value.eigenvalue == pytest.approx(2.0)
    with pytest.raises(PoleError):
        coronal_exact([[1, 0], [0, 2]], 2)


def test_coronal_kab_examples():
    assert coronal_kab(2, 2, 0.5, 3.0) == pytest.approx(4.0)
    assert coronal_kab(1, 1, 0.0, 2.0) == pytest.approx(2.0)
    with pytest.raises(PoleError):
        coronal_kab(1, 1, 0.0, 1.0)
    with pytest.raises(InvalidParameterError):
        coronal_kab(0, 2, 0.5, 3.0)


def test_coronal_kab_matches_numeric_random():
    rng = np.random.default_rng(7)
    done = 0
    while done < 50:
        a, b = (int(x) for x in rng.integers(1, 6, size=2))
        alpha, nu = float(rng.uniform()), float(rng.uniform(-5, 10))
        m = alpha_matrix(complete_bipartite(a, b), alpha)
        if np.min(np.abs(np.linalg.eigvalsh(m) - nu)) < 1e-3:
            continue
        assert coronal_kab(a, b, alpha, nu) == pytest.approx(coronal_numeric(m, nu), rel=1e-9)
        done += 1


# -- identities ----------------------------------------------------------------

def test_rank_one_examples():
    # det(I + J) = 3 = det(I) + 1^T adj(I) 1
    assert rank_one_det_deviation(np.eye(2), 1.0) <= 1e-15
    assert coronal_det_deviation(cycle(4).adjacency(), 0.3, 5.0) <= 1e-12
    inv = shifted_ones_inverse(3, 2.0, 0.5)
    assert np.allclose(inv, 0.5 * np.eye(3) + 0.5 * np.ones((3, 3)))
    assert rank_one_identities_check(cycle(4).adjacency(), 0.3, 0.1, 5.0) == (True, True, True)


def test_identity_preconditions():
    with pytest.raises(LemmaPreconditionError):
        shifted_ones_inverse(2, 1.0, 0.5)
    with pytest.raises(LemmaPreconditionError):
        coronal_det_deviation(cycle(4).adjacency(), 0.3, 2.0)


def test_adjugate_singular():
    m = np.array([[1.0, 2.0], [2.0, 4.0]])
    assert np.allclose(adjugate(m), [[4, -2], [-2, 1]])


def test_kab_alpha_spectrum_closed_form():
    for a, b, alpha in [(1, 1, 0.0), (2, 3, 0.4), (4, 4, 1.0), (1, 5, 0.75)]:
        got = eigenvalues_sorted(alpha_matrix(complete_bipartite(a, b), alpha))
        assert np.allclose(got, kab_alpha_spectrum(a, b, alpha), atol=1e-9)
