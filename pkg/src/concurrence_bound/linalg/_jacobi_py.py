"""Pure numpy Jacobi kernels.

Rotations are scheduled in round-robin order so that each step applies
``n // 2`` disjoint plane rotations at once with array operations. Disjoint
rotations commute, so one sweep is a valid cyclic Jacobi sweep.
"""

import numpy as np

from ..errors import ConvergenceError

EPS = np.finfo(np.float64).eps
MAX_SWEEPS = 60
REL_OFF_TOL = 1e-12


def round_robin(n):
    """Partition all pairs ``p < q`` of ``range(n)`` into rounds of disjoint pairs.

    Returns a list of ``(P, Q)`` index arrays, one per round.
    """
    players = list(range(n)) + ([-1] if n % 2 else [])
    size = len(players)
    rounds = []
    for _ in range(size - 1):
        ps, qs = [], []
        for k in range(size // 2):
            a, b = players[k], players[size - 1 - k]
            if a < 0 or b < 0:
                continue
            ps.append(min(a, b))
            qs.append(max(a, b))
        rounds.append((np.array(ps, dtype=np.intp), np.array(qs, dtype=np.intp)))
        players = [players[0], players[-1]] + players[1:-1]
    return rounds


def _rotation(zeta):
    # smaller root of t**2 + 2*zeta*t - 1 = 0; zeta = 0 gives t = 1
    sign = np.where(zeta >= 0.0, 1.0, -1.0)
    with np.errstate(over="ignore"):
        t = sign / (np.abs(zeta) + np.sqrt(1.0 + zeta * zeta))
    c = 1.0 / np.sqrt(1.0 + t * t)
    return t, c, t * c


def _off_norm(a):
    off = a - np.diag(np.diagonal(a))
    return np.sqrt(np.sum(off.real ** 2 + off.imag ** 2))


def hermitian_jacobi(h):
    """Eigenvalues of a Hermitian matrix by two-sided complex Jacobi rotations.

    The input is not checked for Hermiticity; only its upper triangle and
    real diagonal drive the rotations. Eigenvalues are returned unsorted.
    """
    a = np.array(h, dtype=np.complex128, copy=True)
    n = a.shape[0]
    off0 = _off_norm(a)
    if n < 2 or off0 == 0.0:
        return np.real(np.diagonal(a)).copy()
    target = max(REL_OFF_TOL * off0, EPS * np.linalg.norm(a))
    rounds = round_robin(n)
    for _ in range(MAX_SWEEPS):
        if _off_norm(a) <= target:
            return np.real(np.diagonal(a)).copy()
        for p, q in rounds:
            apq = a[p, q]
            mag = np.abs(apq)
            keep = mag > 0.0
            if not keep.any():
                continue
            p, q, apq, mag = p[keep], q[keep], apq[keep], mag[keep]
            app = a[p, p].real
            aqq = a[q, q].real
            t, c, s = _rotation((aqq - app) / (2.0 * mag))
            sph = s * (apq / mag)
            sphc = np.conj(sph)
            colp, colq = a[:, p], a[:, q]
            a[:, p] = c * colp - sphc * colq
            a[:, q] = sph * colp + c * colq
            rowp, rowq = a[p, :], a[q, :]
            a[p, :] = c[:, None] * rowp - sph[:, None] * rowq
            a[q, :] = sphc[:, None] * rowp + c[:, None] * rowq
            a[p, p] = app - t * mag
            a[q, q] = aqq + t * mag
            a[p, q] = 0.0
            a[q, p] = 0.0
    if _off_norm(a) <= target:
        return np.real(np.diagonal(a)).copy()
    raise ConvergenceError(f"Hermitian Jacobi did not converge in {MAX_SWEEPS} sweeps")


def one_sided_jacobi(m):
    """Singular values by one-sided (Hestenes) Jacobi orthogonalisation of columns.

    Wide inputs are replaced by their conjugate transpose first, so exactly
    ``min(rows, cols)`` values are returned. Values are returned unsorted.
    """
    a = np.array(m, dtype=np.complex128, copy=True)
    if a.shape[1] > a.shape[0]:
        a = a.conj().T.copy()
    rows, cols = a.shape
    tol = rows * EPS
    rounds = round_robin(cols)
    off0 = None
    for _ in range(MAX_SWEEPS):
        off2 = 0.0
        rotated = 0
        for p, q in rounds:
            ap, aq = a[:, p], a[:, q]
            alpha = np.sum(ap.real ** 2 + ap.imag ** 2, axis=0)
            beta = np.sum(aq.real ** 2 + aq.imag ** 2, axis=0)
            gamma = np.sum(np.conj(ap) * aq, axis=0)
            mag = np.abs(gamma)
            off2 += float(np.sum(mag * mag))
            keep = mag > tol * np.sqrt(alpha * beta)
            if not keep.any():
                continue
            rotated += int(keep.sum())
            p, q = p[keep], q[keep]
            ap, aq = ap[:, keep], aq[:, keep]
            alpha, beta, gamma, mag = alpha[keep], beta[keep], gamma[keep], mag[keep]
            _, c, s = _rotation((beta - alpha) / (2.0 * mag))
            sph = s * (gamma / mag)
            a[:, p] = c * ap - np.conj(sph) * aq
            a[:, q] = sph * ap + c * aq
        off = np.sqrt(2.0 * off2)
        if off0 is None:
            off0 = off
        elif off <= REL_OFF_TOL * off0:
            rotated = 0
        if rotated == 0:
            return np.sqrt(np.sum(a.real ** 2 + a.imag ** 2, axis=0))
    raise ConvergenceError(f"one-sided Jacobi did not converge in {MAX_SWEEPS} sweeps")
