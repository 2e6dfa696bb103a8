"""Float64 tanh-sinh nodes and the tensor-product quadrature kernels.

The 2-D kernels evaluate an integrand on an n-by-n grid of tanh-sinh nodes,
a few hundred thousand points per refinement level, and dominate the runtime
of the double integrals.  Each kernel exists twice: an explicit loop compiled
with numba, and a broadcast numpy version.  The numba path is used when numba
imports and ``EULERSERIES_DISABLE_NUMBA`` is unset (or "0"/"false"); set the
variable to "1" to force numpy.

Every node carries ``x``, ``c = 1 - x`` and ``lx = ln x``, each accurate to
full relative precision, so integrands never form ``1 - x`` or ``ln x`` near
x = 1 by cancellation.
"""

from __future__ import annotations

import math
import os
from functools import lru_cache

import numpy as np

__all__ = [
    "NUMBA_ENABLED",
    "numba_available",
    "tanh_sinh_nodes",
    "KERNELS",
    "NUMPY_KERNELS",
    "NUMBA_KERNELS",
]

T_MAX = 4.0  # c = 1 - x at |t| = 4 is about 5e-38, well clear of underflow


def _env_disabled() -> bool:
    return os.environ.get("EULERSERIES_DISABLE_NUMBA", "").strip().lower() not in ("", "0", "false", "no")


try:
    import numba

    numba_available = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    numba_available = False

NUMBA_ENABLED = numba_available and not _env_disabled()


@lru_cache(maxsize=32)
def tanh_sinh_nodes(level: int) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Nodes on [0, 1] with step ``h = 2**-level``: arrays ``(x, c, lx, w)``."""
    h = 2.0**-level
    m = int(T_MAX / h)
    t = np.arange(-m, m + 1) * h
    u = 0.5 * math.pi * np.sinh(t)
    e = np.exp(-2.0 * np.abs(u))
    near = e / (1.0 + e)  # distance to the closer endpoint
    far = 1.0 / (1.0 + e)
    x = np.where(t < 0, near, far)
    c = np.where(t < 0, far, near)
    with np.errstate(divide="ignore"):
        lx = np.where(x < 0.5, np.log(x), np.log1p(-c))
    # dx/dt = (pi/4) cosh t sech^2 u, sech^2 u = 4e/(1+e)^2
    w = h * math.pi * np.cosh(t) * e / (1.0 + e) ** 2
    for a in (x, c, lx, w):
        a.setflags(write=False)
    return x, c, lx, w


# ---------------------------------------------------------------------------
# numpy kernels


def _ln4_over_pi_numpy(x, c, lx, w):
    lxy = lx[:, None] + lx[None, :]
    f = -c[:, None] / ((1.0 + x[:, None] * x[None, :]) * lxy)
    return float(w @ (f @ w))


def _gamma_double_numpy(x, c, lx, w):
    lxy = lx[:, None] + lx[None, :]
    one_minus_xy = c[:, None] + x[:, None] * c[None, :]
    f = -c[:, None] / (one_minus_xy * lxy)
    return float(w @ (f @ w))


def _i2d_numpy(x, c, lx, w, y, wy):
    f = (c / (1.0 + x))[:, None] * np.exp(lx[:, None] * y[None, :])
    return float(w @ (f @ wy))


NUMPY_KERNELS = {
    "ln4_over_pi": _ln4_over_pi_numpy,
    "gamma_double": _gamma_double_numpy,
    "i2d": _i2d_numpy,
}


# ---------------------------------------------------------------------------
# loop kernels, compiled by numba when available


def _ln4_over_pi_loop(x, c, lx, w):
    n = x.shape[0]
    total = 0.0
    for i in range(n):
        row = 0.0
        for j in range(n):
            row += w[j] * c[i] / ((1.0 + x[i] * x[j]) * (lx[i] + lx[j]))
        total += w[i] * row
    return -total


def _gamma_double_loop(x, c, lx, w):
    n = x.shape[0]
    total = 0.0
    for i in range(n):
        row = 0.0
        for j in range(n):
            row += w[j] * c[i] / ((c[i] + x[i] * c[j]) * (lx[i] + lx[j]))
        total += w[i] * row
    return -total


def _i2d_loop(x, c, lx, w, y, wy):
    total = 0.0
    for i in range(x.shape[0]):
        row = 0.0
        for j in range(y.shape[0]):
            row += wy[j] * math.exp(lx[i] * y[j])
        total += w[i] * c[i] / (1.0 + x[i]) * row
    return total


if numba_available:
    _jit = numba.njit(cache=True, nogil=True)
    NUMBA_KERNELS = {
        "ln4_over_pi": _jit(_ln4_over_pi_loop),
        "gamma_double": _jit(_gamma_double_loop),
        "i2d": _jit(_i2d_loop),
    }
else:  # pragma: no cover
    NUMBA_KERNELS = {}

KERNELS = NUMBA_KERNELS if NUMBA_ENABLED else NUMPY_KERNELS
