"""Dense symmetric algebra, exact polynomials, coronals and identity checks."""

from .coronal import coronal_exact, coronal_kab, coronal_numeric
from .eigen import Spectrum, as_symmetric, eigenvalues_sorted, jacobi_eigenvalues, sym_eigenvalues
from .exact import charpoly_exact, det_exact, solve_exact, to_fraction_matrix
from .identities import (
    LemmaCheck,
    adjugate,
    constant_row_sum_coronal_deviation,
    kab_alpha_spectrum,
    lemma_deviations,
    rank_one_identities_check,
    shifted_ones_inverse,
)
from .poly import Poly, poly_gcd, real_roots, squarefree_decomposition

__all__ = [
    "LemmaCheck",
    "Poly",
    "Spectrum",
    "adjugate",
    "as_symmetric",
    "charpoly_exact",
    "constant_row_sum_coronal_deviation",
    "coronal_exact",
    "coronal_kab",
    "coronal_numeric",
    "det_exact",
    "eigenvalues_sorted",
    "jacobi_eigenvalues",
    "kab_alpha_spectrum",
    "lemma_deviations",
    "poly_gcd",
    "rank_one_identities_check",
    "real_roots",
    "shifted_ones_inverse",
    "solve_exact",
    "squarefree_decomposition",
    "sym_eigenvalues",
    "to_fraction_matrix",
]
