"""Dense complex linear algebra: singular values, Hermitian spectra, trace norms.

Every routine takes anything convertible to a 2-D ``complex128`` array and
never mutates its argument. The heavy lifting is done by Jacobi kernels,
compiled when the extension is built and numpy-vectorised otherwise
(see :data:`BACKEND`).

Two algorithmically independent routes to the same spectrum are provided:
:func:`singular_values` orthogonalises the columns of ``M`` directly
(one-sided Jacobi), while :func:`oracle_gram_spectrum` diagonalises the
Gram matrix with two-sided Jacobi rotations. Tests cross-check the two.
"""

import numpy as np

from ..errors import DomainError, ValidationError
from . import _kernels
from ._kernels import BACKEND

__all__ = [
    "BACKEND",
    "HERMITIAN_TOL",
    "as_matrix",
    "hermitian_eigenvalues",
    "is_hermitian",
    "oracle_gram_spectrum",
    "singular_values",
    "trace_norm",
]

#: Absolute entrywise tolerance for accepting a matrix as Hermitian.
HERMITIAN_TOL = 1e-9


def as_matrix(m):
    """Return ``m`` as a finite, non-empty 2-D complex array.

    Raises
    ------
    DomainError
        If ``m`` is not two-dimensional or has no entries.
    ValidationError
        If any entry is NaN or infinite.
    """
    arr = np.asarray(m, dtype=np.complex128)
    if arr.ndim != 2:
        raise DomainError(f"expected a 2-D matrix, got shape {arr.shape}")
    if arr.size == 0:
        raise DomainError("empty matrix")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("finite", "matrix has NaN or infinite entries")
    return arr


def is_hermitian(m, tol=HERMITIAN_TOL):
    """True when ``m`` is square and ``max |m - m^H| <= tol`` entrywise."""
    arr = np.asarray(m)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        return False
    return bool(np.max(np.abs(arr - arr.conj().T), initial=0.0) <= tol)


def singular_values(m):
    """Singular values of ``m`` in nonincreasing order.

    Parameters
    ----------
    m : array_like
        Complex matrix of any shape.

    Returns
    -------
    numpy.ndarray
        ``min(rows, cols)`` nonnegative reals.

    Examples
    --------
    >>> singular_values([[3, 0], [0, -4]])
    array([4., 3.])
    """
    arr = as_matrix(m)
    return np.sort(_kernels.one_sided_jacobi(arr))[::-1]


def hermitian_eigenvalues(h):
    """Real eigenvalues of a Hermitian matrix in nonincreasing order.

    The input is symmetrised as ``(h + h^H) / 2`` after the Hermiticity check.

    Raises
    ------
    DomainError
        If ``h`` is not square.
    ValidationError
        If ``h`` departs from Hermiticity by more than :data:`HERMITIAN_TOL`.
    """
    arr = as_matrix(h)
    if arr.shape[0] != arr.shape[1]:
        raise DomainError(f"Hermitian eigenvalues need a square matrix, got {arr.shape}")
    dev = float(np.max(np.abs(arr - arr.conj().T)))
    if dev > HERMITIAN_TOL:
        raise ValidationError("hermitian", f"max |H - H^H| = {dev:.3e} exceeds {HERMITIAN_TOL:g}")
    sym = 0.5 * (arr + arr.conj().T)
    return np.sort(_kernels.hermitian_jacobi(sym))[::-1]


def trace_norm(m):
    """Trace norm ``Tr sqrt(M M^H)``, the sum of singular values.

    Exactly Hermitian inputs take the eigenvalue route ``sum |lambda_i|``;
    all others go through :func:`singular_values`.

    Examples
    --------
    >>> float(trace_norm([[1, 0], [0, -1]]))
    2.0
    """
    arr = as_matrix(m)
    if arr.shape[0] == arr.shape[1] and np.array_equal(arr, arr.conj().T):
        return float(np.sum(np.abs(hermitian_eigenvalues(arr))))
    return float(np.sum(singular_values(arr)))


def oracle_gram_spectrum(m):
    """Eigenvalues of the Gram matrix of ``m``, for cross-checking :func:`singular_values`.

    The smaller of ``M^H M`` and ``M M^H`` is diagonalised by two-sided
    Jacobi rotations, so the result has ``min(rows, cols)`` entries whose
    square roots are the singular values. Roundoff negatives are clipped to 0.
    """
    arr = as_matrix(m)
    gram = arr.conj().T @ arr if arr.shape[0] >= arr.shape[1] else arr @ arr.conj().T
    gram = 0.5 * (gram + gram.conj().T)
    vals = np.clip(_kernels.hermitian_jacobi(gram), 0.0, None)
    return np.sort(vals)[::-1]
