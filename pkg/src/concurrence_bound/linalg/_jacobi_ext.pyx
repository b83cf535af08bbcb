# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled cyclic-by-row Jacobi kernels.

Same contracts and termination rules as ``_jacobi_py``; the sweeps run
without the GIL.
"""

import numpy as np

from libc.math cimport sqrt, fabs

from concurrence_bound.errors import ConvergenceError

cdef double EPS = 2.220446049250313e-16
cdef int _MAX_SWEEPS = 60
cdef double _REL_OFF_TOL = 1e-12
MAX_SWEEPS = _MAX_SWEEPS
REL_OFF_TOL = _REL_OFF_TOL


cdef inline double _abs2(double complex z) noexcept nogil:
    return z.real * z.real + z.imag * z.imag


cdef inline double _tangent(double zeta) noexcept nogil:
    if zeta >= 0.0:
        return 1.0 / (zeta + sqrt(1.0 + zeta * zeta))
    return -1.0 / (-zeta + sqrt(1.0 + zeta * zeta))


cdef double _off_norm(double complex[:, ::1] a) noexcept nogil:
    cdef Py_ssize_t n = a.shape[0], i, j
    cdef double acc = 0.0
    for i in range(n):
        for j in range(n):
            if i != j:
                acc += _abs2(a[i, j])
    return sqrt(acc)


cdef int _hermitian_sweeps(double complex[:, ::1] a, double target, int max_sweeps) noexcept nogil:
    cdef Py_ssize_t n = a.shape[0], p, q, k
    cdef double mag, app, aqq, t, c, s
    cdef double complex sph, sphc, x, y
    cdef int sweep
    for sweep in range(max_sweeps + 1):
        if _off_norm(a) <= target:
            return 1
        if sweep == max_sweeps:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                mag = sqrt(_abs2(a[p, q]))
                if mag == 0.0:
                    continue
                app = a[p, p].real
                aqq = a[q, q].real
                t = _tangent((aqq - app) / (2.0 * mag))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                sph = s * (a[p, q] / mag)
                sphc = sph.conjugate()
                for k in range(n):
                    x = a[k, p]
                    y = a[k, q]
                    a[k, p] = c * x - sphc * y
                    a[k, q] = sph * x + c * y
                for k in range(n):
                    x = a[p, k]
                    y = a[q, k]
                    a[p, k] = c * x - sph * y
                    a[q, k] = sphc * x + c * y
                a[p, p] = app - t * mag
                a[q, q] = aqq + t * mag
                a[p, q] = 0.0
                a[q, p] = 0.0
    return 0


def hermitian_jacobi(h):
    """Eigenvalues of a Hermitian matrix, unsorted."""
    arr = np.array(h, dtype=np.complex128, order="C", copy=True)
    cdef double complex[:, ::1] a = arr
    cdef double off0 = _off_norm(a)
    cdef double target
    cdef int ok
    if a.shape[0] < 2 or off0 == 0.0:
        return np.real(np.diagonal(arr)).copy()
    target = max(REL_OFF_TOL * off0, EPS * np.linalg.norm(arr))
    with nogil:
        ok = _hermitian_sweeps(a, target, _MAX_SWEEPS)
    if not ok:
        raise ConvergenceError(f"Hermitian Jacobi did not converge in {MAX_SWEEPS} sweeps")
    return np.real(np.diagonal(arr)).copy()


cdef int _one_sided_sweeps(double complex[:, ::1] at, int max_sweeps) noexcept nogil:
    # rows of ``at`` are the columns being orthogonalised
    cdef Py_ssize_t cols = at.shape[0], rows = at.shape[1], p, q, k
    cdef double tol = rows * EPS
    cdef double alpha, beta, mag, off2, off, off0 = -1.0, c, s, t
    cdef double complex gamma, sph, sphc, x, y
    cdef int sweep, rotated
    for sweep in range(max_sweeps):
        off2 = 0.0
        rotated = 0
        for p in range(cols - 1):
            for q in range(p + 1, cols):
                alpha = 0.0
                beta = 0.0
                gamma = 0.0
                for k in range(rows):
                    x = at[p, k]
                    y = at[q, k]
                    alpha += _abs2(x)
                    beta += _abs2(y)
                    gamma = gamma + x.conjugate() * y
                mag = sqrt(_abs2(gamma))
                off2 += mag * mag
                if not (mag > tol * sqrt(alpha * beta)):
                    continue
                rotated += 1
                t = _tangent((beta - alpha) / (2.0 * mag))
                c = 1.0 / sqrt(1.0 + t * t)
                s = t * c
                sph = s * (gamma / mag)
                sphc = sph.conjugate()
                for k in range(rows):
                    x = at[p, k]
                    y = at[q, k]
                    at[p, k] = c * x - sphc * y
                    at[q, k] = sph * x + c * y
        off = sqrt(2.0 * off2)
        if off0 < 0.0:
            off0 = off
        elif off <= _REL_OFF_TOL * off0:
            rotated = 0
        if rotated == 0:
            return 1
    return 0


def one_sided_jacobi(m):
    """Singular values of a complex matrix, ``min(rows, cols)`` of them, unsorted."""
    arr = np.asarray(m, dtype=np.complex128)
    if arr.shape[1] > arr.shape[0]:
        # columns of the conjugate transpose are the conjugated rows
        work = np.ascontiguousarray(np.conj(arr))
    else:
        work = np.ascontiguousarray(arr.T)
    work = work.copy()
    cdef double complex[:, ::1] at = work
    cdef int ok
    with nogil:
        ok = _one_sided_sweeps(at, _MAX_SWEEPS)
    if not ok:
        raise ConvergenceError(f"one-sided Jacobi did not converge in {MAX_SWEEPS} sweeps")
    return np.sqrt(np.sum(work.real ** 2 + work.imag ** 2, axis=1))
