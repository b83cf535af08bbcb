"""Concurrence of pure states and the trace-norm lower bound for mixed states.

For an ``m x n`` state with ``m = min(dim_a, dim_b)``::

    C(rho) >= sqrt(2 / (m (m - 1))) * (max(||rho^{T_A}||, ||R(rho)||) - 1)

No convex-roof optimisation is performed anywhere in this module.
"""

from dataclasses import dataclass
from math import log2, sqrt
from typing import Optional

import numpy as np

from .criteria import CriteriaScores, criteria_scores
from .errors import DomainError, UnsupportedDimensionError
from .states import SchmidtSpectrum

#: Bounds above this value count as detected entanglement.
DETECTION_THRESHOLD = 1e-7
#: Norms closer than this are reported as a tie.
TIE_TOL = 1e-10


@dataclass(frozen=True)
class ConcurrenceBound:
    """Lower bound on ``C(rho)``.

    ``raw_bound`` is the unclamped value, ``value = max(0, raw_bound)``;
    ``source`` names the norm that attained the maximum (``"ppt"``,
    ``"realignment"`` or ``"tie"``) and ``m_used`` the smaller local dimension.
    """

    value: float
    source: str
    raw_bound: float
    m_used: int


@dataclass(frozen=True)
class EntanglementReport:
    label: str
    dim_a: int
    dim_b: int
    scores: CriteriaScores
    bound: ConcurrenceBound
    eof_lower_bound: Optional[float]
    entangled: bool


def schmidt_spectrum(psi):
    """Squared Schmidt coefficients of a pure state, ``min(m, n)`` of them."""
    from .states import schmidt_coefficients

    sigma = schmidt_coefficients(psi)
    mu = sigma * sigma
    return SchmidtSpectrum(mu / mu.sum())


def _pair_sum(x):
    # sum_{i<j} x_i x_j
    return 0.5 * (np.sum(x) ** 2 - np.sum(x * x))


def pure_concurrence(psi):
    """``C(psi) = sqrt(2 (1 - sum mu_i^2))``, checked against ``4 sum_{i<j} mu_i mu_j``."""
    mu = schmidt_spectrum(psi).coefficients
    squared = 2.0 * (1.0 - float(np.sum(mu * mu)))
    assert abs(squared - 4.0 * _pair_sum(mu)) <= 1e-10
    return sqrt(max(squared, 0.0))


def max_concurrence(m):
    """Largest concurrence on an ``m x n`` system, ``sqrt(2 (m - 1) / m)``."""
    return sqrt(2.0 * (m - 1) / m)


def bound_from_scores(scores, m):
    """Apply the lower-bound formula to precomputed scores."""
    if m < 2:
        raise DomainError("concurrence bound needs both local dimensions >= 2")
    ppt, ccnr = scores.ppt_norm, scores.realignment_norm
    if abs(ppt - ccnr) <= TIE_TOL:
        source = "tie"
    elif ppt > ccnr:
        source = "ppt"
    else:
        source = "realignment"
    raw = sqrt(2.0 / (m * (m - 1))) * (max(ppt, ccnr) - 1.0)
    return ConcurrenceBound(value=max(0.0, raw), source=source, raw_bound=raw, m_used=m)


def concurrence_lower_bound(rho, scores=None):
    """Analytical lower bound on the concurrence of ``rho``.

    Parameters
    ----------
    rho : BipartiteState
        Any valid state with both local dimensions at least 2.
    scores : CriteriaScores, optional
        Reused instead of recomputing the trace norms.

    Returns
    -------
    ConcurrenceBound
    """
    m = min(rho.dim_a, rho.dim_b)
    if m < 2:
        raise DomainError(f"concurrence bound needs both local dimensions >= 2, got {rho.dims}")
    if scores is None:
        scores = criteria_scores(rho)
    return bound_from_scores(scores, m)


def isotropic_exact_concurrence(d, fidelity):
    """Known concurrence of the isotropic state: ``sqrt(2d/(d-1)) (F - 1/d)`` above ``F = 1/d``."""
    if d < 2:
        raise DomainError(f"isotropic state needs d >= 2, got {d}")
    if not 0.0 <= fidelity <= 1.0:
        raise DomainError(f"fidelity must lie in [0, 1], got {fidelity}")
    if fidelity <= 1.0 / d:
        return 0.0
    return sqrt(2.0 * d / (d - 1)) * (fidelity - 1.0 / d)


def binary_entropy(x):
    """``H2(x)`` in bits, with ``H2(0) = H2(1) = 0``."""
    if x <= 0.0 or x >= 1.0:
        return 0.0
    return -x * log2(x) - (1.0 - x) * log2(1.0 - x)


def eof_from_concurrence(c):
    """Qubit-qudit entanglement of formation as a function of concurrence."""
    if c <= 0.0:
        return 0.0
    return binary_entropy(0.5 * (1.0 + sqrt(max(0.0, 1.0 - c * c))))


def eof_lower_bound(rho, bound=None):
    """Lower bound on the entanglement of formation of a ``2 x n`` state.

    Raises
    ------
    UnsupportedDimensionError
        If neither local dimension is 2.
    """
    if min(rho.dim_a, rho.dim_b) != 2:
        raise UnsupportedDimensionError(
            f"EOF bound is only available when the smaller dimension is 2, got {rho.dims}"
        )
    if bound is None:
        bound = concurrence_lower_bound(rho)
    return eof_from_concurrence(bound.value)


def theorem_inequality_gap(mu, m):
    """``4 sum_{i<j} mu_i mu_j - 8/(m(m-1)) (sum_{i<j} sqrt(mu_i mu_j))^2``.

    Nonnegative for every spectrum; zero for product and uniform spectra.
    """
    if not isinstance(mu, SchmidtSpectrum):
        mu = SchmidtSpectrum(mu)
    if m < 2:
        raise DomainError(f"m must be at least 2, got {m}")
    x = mu.padded(m)
    return 4.0 * _pair_sum(x) - 8.0 / (m * (m - 1)) * _pair_sum(np.sqrt(x)) ** 2


def theorem_inequality_check(mu, m):
    """True when :func:`theorem_inequality_gap` is at least ``-1e-12``."""
    return bool(theorem_inequality_gap(mu, m) >= -1e-12)


def analyze(rho, label="state"):
    """Scores, bound, optional EOF bound and verdict for one state."""
    scores = criteria_scores(rho)
    bound = concurrence_lower_bound(rho, scores)
    eof = eof_lower_bound(rho, bound) if bound.m_used == 2 else None
    return EntanglementReport(
        label=label,
        dim_a=rho.dim_a,
        dim_b=rho.dim_b,
        scores=scores,
        bound=bound,
        eof_lower_bound=eof,
        entangled=bound.value > DETECTION_THRESHOLD,
    )
