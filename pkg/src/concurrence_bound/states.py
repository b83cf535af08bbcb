"""Validated bipartite states and constructors for the catalog families.

Composite basis convention: the product ket ``|i>_A |k>_B`` of an ``m x n``
system sits at flat index ``i * n + k`` (subsystem A major). Partial
transposition and realignment in :mod:`concurrence_bound.criteria` are
written against this single convention.
"""

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .errors import DomainError, ValidationError
from .linalg import HERMITIAN_TOL, as_matrix, hermitian_eigenvalues, singular_values

TRACE_TOL = 1e-9
PSD_TOL = 1e-9
NORM_TOL = 1e-9

#: Height and normalisation of the five "pyramid" vectors.
PYRAMID_HEIGHT = sqrt(1.0 + sqrt(5.0)) / 2.0
PYRAMID_NORM = 2.0 / sqrt(5.0 + sqrt(5.0))


def _check_dims(dim_a, dim_b):
    for name, d in (("dim_a", dim_a), ("dim_b", dim_b)):
        if isinstance(d, bool) or not isinstance(d, (int, np.integer)) or d < 1:
            raise ValidationError("dimension", f"{name} must be a positive integer, got {d!r}")
    return int(dim_a), int(dim_b)


def _frozen(arr):
    arr = np.array(arr, dtype=np.complex128, copy=True)
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True, eq=False)
class BipartiteState:
    """Density matrix of an ``dim_a x dim_b`` system.

    Construction validates Hermiticity, unit trace and positive
    semidefiniteness, each to an absolute tolerance of ``1e-9``; the stored
    matrix is a read-only copy. ``dim_a <= dim_b`` is not required.

    Raises
    ------
    ValidationError
        Naming the first violated invariant: ``"dimension"``, ``"finite"``,
        ``"hermitian"``, ``"trace"`` or ``"psd"``.
    """

    matrix: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        dim_a, dim_b = _check_dims(self.dim_a, self.dim_b)
        try:
            mat = as_matrix(self.matrix)
        except DomainError as exc:
            raise ValidationError("dimension", str(exc)) from None
        size = dim_a * dim_b
        if mat.shape != (size, size):
            raise ValidationError(
                "dimension", f"matrix shape {mat.shape} does not match {dim_a}x{dim_b} = {size}"
            )
        dev = float(np.max(np.abs(mat - mat.conj().T)))
        if dev > HERMITIAN_TOL:
            raise ValidationError("hermitian", f"max |rho - rho^H| = {dev:.3e}")
        tr = np.trace(mat)
        if abs(tr - 1.0) > TRACE_TOL:
            raise ValidationError("trace", f"trace is {tr.real:.12g}{tr.imag:+.3g}j, expected 1")
        lam_min = hermitian_eigenvalues(mat)[-1]
        if lam_min < -PSD_TOL:
            raise ValidationError("psd", f"minimum eigenvalue {lam_min:.3e} is negative")
        object.__setattr__(self, "matrix", _frozen(mat))
        object.__setattr__(self, "dim_a", dim_a)
        object.__setattr__(self, "dim_b", dim_b)

    @property
    def dims(self):
        return self.dim_a, self.dim_b

    def purity(self):
        """``Tr rho^2``."""
        return float(np.real(np.vdot(self.matrix, self.matrix)))


@dataclass(frozen=True, eq=False)
class PureState:
    """Normalised ket on a ``dim_a x dim_b`` system (A-major flattening)."""

    ket: np.ndarray
    dim_a: int
    dim_b: int

    def __post_init__(self):
        dim_a, dim_b = _check_dims(self.dim_a, self.dim_b)
        ket = np.asarray(self.ket, dtype=np.complex128)
        if ket.ndim != 1 or ket.shape[0] != dim_a * dim_b:
            raise ValidationError("dimension", f"ket shape {ket.shape} does not match {dim_a}x{dim_b}")
        if not np.all(np.isfinite(ket)):
            raise ValidationError("finite", "ket has NaN or infinite entries")
        norm = float(np.linalg.norm(ket))
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError("norm", f"ket norm is {norm:.12g}, expected 1")
        object.__setattr__(self, "ket", _frozen(ket))
        object.__setattr__(self, "dim_a", dim_a)
        object.__setattr__(self, "dim_b", dim_b)

    def coefficient_matrix(self):
        """The ket reshaped to ``dim_a x dim_b``; its singular values are the Schmidt coefficients."""
        return self.ket.reshape(self.dim_a, self.dim_b)


@dataclass(frozen=True, eq=False)
class SchmidtSpectrum:
    """Squared Schmidt coefficients ``mu_i``: nonnegative, nonincreasing, summing to one."""

    coefficients: np.ndarray

    def __post_init__(self):
        mu = np.asarray(self.coefficients, dtype=np.float64)
        if mu.ndim != 1 or mu.size == 0:
            raise ValidationError("dimension", "spectrum must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(mu)) or np.any(mu < 0.0):
            raise ValidationError("nonnegative", "spectrum entries must be finite and nonnegative")
        if np.any(np.diff(mu) > 0.0):
            raise ValidationError("order", "spectrum must be nonincreasing")
        if abs(mu.sum() - 1.0) > NORM_TOL:
            raise ValidationError("trace", f"spectrum sums to {mu.sum():.12g}, expected 1")
        mu = mu.copy()
        mu.flags.writeable = False
        object.__setattr__(self, "coefficients", mu)

    @classmethod
    def from_weights(cls, weights):
        """Sort and normalise arbitrary nonnegative weights into a spectrum."""
        w = np.sort(np.asarray(weights, dtype=np.float64))[::-1]
        if np.any(w < 0.0) or w.sum() <= 0.0:
            raise DomainError("weights must be nonnegative with a positive sum")
        return cls(w / w.sum())

    def __len__(self):
        return self.coefficients.size

    def padded(self, length):
        """Coefficients padded with zeros to ``length``."""
        if length < len(self):
            raise DomainError(f"spectrum of length {len(self)} does not fit in {length}")
        return np.concatenate([self.coefficients, np.zeros(length - len(self))])


def basis_ket(index, dim):
    """Computational basis vector ``|index>`` of dimension ``dim``."""
    e = np.zeros(dim, dtype=np.complex128)
    e[index] = 1.0
    return e


def density_from_pure(psi):
    """Projector ``|psi><psi|`` as a :class:`BipartiteState`."""
    ket = psi.ket
    return BipartiteState(np.outer(ket, ket.conj()), psi.dim_a, psi.dim_b)


def pure_from_schmidt(mu, dim_a, dim_b):
    """Ket ``sum_i sqrt(mu_i) |i>_A |i>_B`` in the computational basis.

    Spectra shorter than ``min(dim_a, dim_b)`` are padded with zeros;
    longer ones raise :class:`DomainError`.
    """
    if not isinstance(mu, SchmidtSpectrum):
        mu = SchmidtSpectrum(mu)
    k = min(dim_a, dim_b)
    if len(mu) > k:
        raise DomainError(f"spectrum of length {len(mu)} exceeds min({dim_a}, {dim_b}) = {k}")
    ket = np.zeros(dim_a * dim_b, dtype=np.complex128)
    for i, m in enumerate(mu.coefficients):
        ket[i * dim_b + i] = sqrt(m)
    return PureState(ket, dim_a, dim_b)


def maximally_entangled(d):
    """``|Psi+> = sum_i |ii> / sqrt(d)`` on ``d x d``."""
    if d < 2:
        raise DomainError(f"maximally entangled state needs d >= 2, got {d}")
    return pure_from_schmidt(np.full(d, 1.0 / d), d, d)


def maximally_mixed(dim_a, dim_b):
    """``I / (dim_a * dim_b)``."""
    size = dim_a * dim_b
    return BipartiteState(np.eye(size) / size, dim_a, dim_b)


def isotropic(d, fidelity):
    """Isotropic state mixing ``|Psi+><Psi+|`` with white noise on its complement.

    ``rho_F = (1 - F) / (d^2 - 1) * (I - P) + F * P`` with ``P`` the
    maximally entangled projector; separable for ``F <= 1/d``.
    """
    if d < 2:
        raise DomainError(f"isotropic state needs d >= 2, got {d}")
    if not 0.0 <= fidelity <= 1.0:
        raise DomainError(f"fidelity must lie in [0, 1], got {fidelity}")
    mes = maximally_entangled(d).ket
    proj = np.outer(mes, mes.conj())
    noise = (1.0 - fidelity) / (d * d - 1)
    return BipartiteState(noise * (np.eye(d * d) - proj) + fidelity * proj, d, d)


def fidelity_with_mes(rho):
    """Overlap ``<Psi+| rho |Psi+>`` of a ``d x d`` state with the maximally entangled ket."""
    if rho.dim_a != rho.dim_b:
        raise DomainError(f"fidelity with |Psi+> needs dim_a == dim_b, got {rho.dims}")
    mes = maximally_entangled(rho.dim_a).ket
    return float(np.real(np.vdot(mes, rho.matrix @ mes)))


def upb_bound_entangled(kets, dim_a, dim_b):
    """Normalised projector onto the complement of an orthonormal product basis."""
    size = dim_a * dim_b
    proj = sum(np.outer(k, np.conj(k)) for k in kets)
    return BipartiteState((np.eye(size) - proj) / (size - len(kets)), dim_a, dim_b)


def tiles_vectors():
    """The five ``3 x 3`` "Tiles" product kets."""
    e0, e1, e2 = (basis_ket(i, 3) for i in range(3))
    r2 = sqrt(2.0)
    uniform = e0 + e1 + e2
    return [
        np.kron(e0, e0 - e1) / r2,
        np.kron(e0 - e1, e2) / r2,
        np.kron(e2, e1 - e2) / r2,
        np.kron(e1 - e2, e0) / r2,
        np.kron(uniform, uniform) / 3.0,
    ]


def tiles_upb():
    """Bound entangled ``3 x 3`` state built from the Tiles product basis."""
    return upb_bound_entangled(tiles_vectors(), 3, 3)


def pyramid_local_vectors():
    """The five unit vectors ``N (cos 2 pi j / 5, sin 2 pi j / 5, h)``."""
    angles = 2.0 * np.pi * np.arange(5) / 5.0
    return [
        PYRAMID_NORM * np.array([np.cos(a), np.sin(a), PYRAMID_HEIGHT], dtype=np.complex128)
        for a in angles
    ]


def pyramid_vectors():
    """Product kets ``v_j (x) v_{2j mod 5}``."""
    v = pyramid_local_vectors()
    return [np.kron(v[j], v[(2 * j) % 5]) for j in range(5)]


def pyramid_upb():
    """Bound entangled ``3 x 3`` state built from the Pyramid product basis."""
    return upb_bound_entangled(pyramid_vectors(), 3, 3)


def horodecki_3x3(alpha):
    """Horodecki two-qutrit family ``sigma_alpha`` for ``2 <= alpha <= 5``.

    Separable on ``[2, 3]``, bound entangled on ``(3, 4]`` and free
    entangled on ``(4, 5]``.
    """
    if not 2.0 <= alpha <= 5.0:
        raise DomainError(f"alpha must lie in [2, 5], got {alpha}")
    mes = maximally_entangled(3).ket
    sigma_plus = np.zeros((9, 9))
    sigma_minus = np.zeros((9, 9))
    for i in range(3):
        up = 3 * i + (i + 1) % 3
        down = 3 * ((i + 1) % 3) + i
        sigma_plus[up, up] = 1.0 / 3.0
        sigma_minus[down, down] = 1.0 / 3.0
    mat = (
        (2.0 / 7.0) * np.outer(mes, mes.conj())
        + (alpha / 7.0) * sigma_plus
        + ((5.0 - alpha) / 7.0) * sigma_minus
    )
    return BipartiteState(mat, 3, 3)


def product_state(rho_a, rho_b):
    """``rho_a (x) rho_b`` from two local density matrices."""
    rho_a = as_matrix(rho_a)
    rho_b = as_matrix(rho_b)
    return BipartiteState(np.kron(rho_a, rho_b), rho_a.shape[0], rho_b.shape[0])


def apply_local_unitary(rho, u_a, u_b):
    """``(U_A (x) U_B) rho (U_A (x) U_B)^H``."""
    u = np.kron(as_matrix(u_a), as_matrix(u_b))
    return BipartiteState(u @ rho.matrix @ u.conj().T, rho.dim_a, rho.dim_b)


def mixture(states, weights):
    """Convex combination ``sum_k w_k rho_k`` of states sharing one bipartition."""
    states = list(states)
    w = np.asarray(weights, dtype=np.float64)
    if len(states) != w.size or np.any(w < 0.0) or abs(w.sum() - 1.0) > NORM_TOL:
        raise DomainError("weights must be a probability vector matching the states")
    dims = {s.dims for s in states}
    if len(dims) != 1:
        raise DomainError(f"states have differing dimensions {sorted(dims)}")
    mat = sum(wk * s.matrix for wk, s in zip(w, states))
    return BipartiteState(mat, *dims.pop())


def schmidt_coefficients(psi):
    """Singular values of the coefficient matrix of ``psi``, nonincreasing."""
    return singular_values(psi.coefficient_matrix())
