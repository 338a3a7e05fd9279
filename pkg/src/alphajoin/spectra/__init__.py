"""A_alpha matrices, closed-form join spectra and the theorem factorizations."""

from .closed_form import ClosedFormSpectrum, closed_form_spectrum
from .compare import SpectrumComparison, direct_join_spectrum, flat_values, spectra_equal
from .joinspec import Arbitrary, CompleteBipartite, G2Class, JoinSpec, Regular, classify_g2
from .matrix import alpha_matrix, alpha_matrix_exact, check_alpha, signless_laplacian
from .theorems import JoinFactors, factors_for, theorem_charpoly_eval, theorem_charpoly_exact

__all__ = [
    "Arbitrary",
    "ClosedFormSpectrum",
    "CompleteBipartite",
    "G2Class",
    "JoinFactors",
    "JoinSpec",
    "Regular",
    "SpectrumComparison",
    "alpha_matrix",
    "alpha_matrix_exact",
    "check_alpha",
    "classify_g2",
    "closed_form_spectrum",
    "direct_join_spectrum",
    "factors_for",
    "flat_values",
    "signless_laplacian",
    "spectra_equal",
    "theorem_charpoly_eval",
    "theorem_charpoly_exact",
]
