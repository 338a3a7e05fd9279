"""A_alpha spectra of Q/T vertex and edge joins.

``A_alpha(G) = alpha D(G) + (1 - alpha) A(G)``.  For a regular G1 the
spectrum of each join is assembled in closed form from the factor graphs
(:func:`closed_form_spectrum`) and cross-checked against a dense eigensolver
(:func:`direct_join_spectrum`).
"""

from .cospectral import (
    CospectralCertificate,
    Evidence,
    SeedPair,
    generate_coronal_family,
    generate_family,
    get_seed,
    verify_cospectral,
)
from .errors import (
    AlphaJoinError,
    ContractViolation,
    InvalidInputError,
    InvalidParameterError,
    LemmaPreconditionError,
    NumericInconsistencyError,
    ParseError,
    PoleError,
    PreconditionError,
    UnsupportedClassError,
)
from .graph import (
    Graph,
    JoinKind,
    build_family,
    degrees,
    incidence_matrix,
    join,
    line_graph,
    parse_family,
    q_graph,
    regularity,
    total_graph,
)
from .linalg import Poly, Spectrum, charpoly_exact, coronal_kab, coronal_numeric, real_roots, sym_eigenvalues
from .spectra import (
    Arbitrary,
    ClosedFormSpectrum,
    CompleteBipartite,
    JoinSpec,
    Regular,
    alpha_matrix,
    closed_form_spectrum,
    direct_join_spectrum,
    spectra_equal,
    theorem_charpoly_eval,
    theorem_charpoly_exact,
)

__version__ = "0.1.0"
