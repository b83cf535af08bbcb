"""Kernel selection: the compiled extension when importable, numpy otherwise.

Setting ``CONCURRENCE_BOUND_PURE_PYTHON=1`` forces the numpy kernels.
"""

import os

from . import _jacobi_py

BACKEND = "python"
impl = _jacobi_py

if os.environ.get("CONCURRENCE_BOUND_PURE_PYTHON", "0") in ("", "0"):
    try:
        from . import _jacobi_ext as impl
    except ImportError:
        impl = _jacobi_py
    else:
        BACKEND = "compiled"

hermitian_jacobi = impl.hermitian_jacobi
one_sided_jacobi = impl.one_sided_jacobi
