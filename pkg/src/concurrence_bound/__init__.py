"""Analytical concurrence lower bounds for bipartite quantum states.

The bound combines the trace norms of the partially transposed and the
realigned density matrix; see :func:`concurrence_lower_bound`.
"""

from .concurrence import (
    ConcurrenceBound,
    EntanglementReport,
    analyze,
    concurrence_lower_bound,
    eof_lower_bound,
    isotropic_exact_concurrence,
    pure_concurrence,
    schmidt_spectrum,
    theorem_inequality_check,
)
from .criteria import CriteriaScores, criteria_scores, is_ppt, partial_transpose_a, realign
from .errors import (
    ConcurrenceBoundError,
    ConvergenceError,
    DomainError,
    ParseError,
    UnsupportedDimensionError,
    ValidationError,
)
from .io import load_state, save_state, write_report
from .linalg import BACKEND, hermitian_eigenvalues, oracle_gram_spectrum, singular_values, trace_norm
from .states import (
    BipartiteState,
    PureState,
    SchmidtSpectrum,
    density_from_pure,
    fidelity_with_mes,
    horodecki_3x3,
    isotropic,
    maximally_entangled,
    pure_from_schmidt,
    pyramid_upb,
    tiles_upb,
)

__version__ = "0.1.0"
