"""Partial transposition and realignment maps, and the trace-norm scores built on them.

For a separable state both ``||rho^{T_A}||`` and ``||R(rho)||`` are at most 1
(PPT and CCNR criteria). Transposing subsystem B instead of A gives the
full transpose of ``rho^{T_A}`` and therefore the same trace norm, so only
the A-side map is provided.
"""

from dataclasses import dataclass

import numpy as np

from .linalg import hermitian_eigenvalues, singular_values

PPT_TOL = 1e-9


def _as_tensor(rho):
    m, n = rho.dim_a, rho.dim_b
    # axes: (i, k, j, l) for row (i, k) and column (j, l)
    return rho.matrix.reshape(m, n, m, n)


def partial_transpose_a(rho):
    """``rho^{T_A}``, i.e. ``[rho^{T_A}]_{(i,k),(j,l)} = rho_{(j,k),(i,l)}``.

    Returns a plain ``(mn) x (mn)`` array.
    """
    m, n = rho.dim_a, rho.dim_b
    return _as_tensor(rho).transpose(2, 1, 0, 3).reshape(m * n, m * n).copy()


def realign(rho):
    """Realigned matrix ``R(rho)_{(i,j),(k,l)} = rho_{(i,k),(j,l)}``.

    Rows run over pairs of A indices and columns over pairs of B indices,
    first index major in both, giving an ``m^2 x n^2`` array.
    """
    m, n = rho.dim_a, rho.dim_b
    return _as_tensor(rho).transpose(0, 2, 1, 3).reshape(m * m, n * n).copy()


@dataclass(frozen=True)
class CriteriaScores:
    """Trace-norm diagnostics of one state.

    ``ppt_norm`` comes from the eigenvalues of ``rho^{T_A}`` and
    ``realignment_norm`` from the singular values of ``R(rho)``.
    """

    ppt_norm: float
    realignment_norm: float
    min_pt_eigenvalue: float

    @property
    def negativity(self):
        return self.ppt_norm - 1.0

    @property
    def ccnr_violation(self):
        return self.realignment_norm - 1.0

    def as_dict(self):
        return {
            "ppt_norm": self.ppt_norm,
            "realignment_norm": self.realignment_norm,
            "negativity": self.negativity,
            "ccnr_violation": self.ccnr_violation,
            "min_pt_eigenvalue": self.min_pt_eigenvalue,
        }


def criteria_scores(rho):
    """Compute both trace norms and the smallest eigenvalue of ``rho^{T_A}``."""
    eig = hermitian_eigenvalues(partial_transpose_a(rho))
    return CriteriaScores(
        ppt_norm=float(np.sum(np.abs(eig))),
        realignment_norm=float(np.sum(singular_values(realign(rho)))),
        min_pt_eigenvalue=float(eig[-1]),
    )


def is_ppt(rho):
    """True when ``rho^{T_A}`` has no eigenvalue below ``-1e-9``."""
    return bool(hermitian_eigenvalues(partial_transpose_a(rho))[-1] >= -PPT_TOL)
