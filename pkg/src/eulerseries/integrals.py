"""Double-exponential quadrature for the integral representations of
ln(pi/2), ln(4/pi), Euler's constant and d/ds f(t, s) at s = 0.

All integrands live on [0, 1] or [0, 1]**2 and have removable singularities
or integrable blow-ups only at the edges.  Tanh-sinh nodes never touch the
edges, and each node carries ``1 - x`` and ``ln x`` computed without
cancellation, so the integrands below are evaluated as written; the point
functions at the bottom of the module supply the continuity values for
callers who want the integrand at an edge.

Two engines:

* float64 for tolerances down to 1e-12, with the tensor-product 2-D sums in
  :mod:`eulerseries._kernels` (numba or numpy);
* mpmath at the context's working precision for tighter 1-D tolerances.
  There is no high-precision 2-D engine; asking for one raises
  :class:`~eulerseries.errors.PrecisionExhausted`.

The error estimate is ten times the difference between the last two
refinement levels.  It is an empirical figure, not a bound.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from . import _kernels
from .errors import DomainError, PrecisionExhausted
from .precision import PrecisionContext, _mp_context

__all__ = [
    "QuadratureResult",
    "FLOAT_TOL_FLOOR",
    "integral_ln_pi_over_2",
    "integral_I_reduced",
    "double_integral_ln4_over_pi",
    "double_integral_gamma",
    "integral_I_2d",
    "integral_I_tail",
    "f_prime0_integral",
    "gamma_classical_integral",
    "gamma_via_f_integral",
    "unity_via_f_integral",
    "integrand_ln_pi_over_2",
    "integrand_ln4_over_pi",
    "integrand_gamma_double",
    "integrand_I",
    "integrand_gamma_classical",
    "integrand_f_prime0",
    "inner_t_gamma",
    "inner_t_unity",
    "reduced_gamma_via_f",
    "reduced_unity_via_f",
]

SAFETY = 10.0
FLOAT_TOL_FLOOR = 1e-12
_MIN_LEVEL = 2
_MAX_LEVEL_1D = 10
_MAX_LEVEL_2D = 8
_MAX_LEVEL_MP = 12


@dataclass(frozen=True)
class QuadratureResult:
    value: object
    error_estimate: object
    evaluations: int

    def __post_init__(self):
        if self.error_estimate < 0:
            raise ValueError("error_estimate must be non-negative")
        if self.evaluations < 1:
            raise ValueError("evaluations must be positive")


# ---------------------------------------------------------------------------
# integrands on tanh-sinh nodes; ``M`` is numpy or an mpmath context


def _i_reduced(x, c, lx, M):
    # (1-x)/(1+x) * int_0^inf x**y dy  =  -(1-x)/((1+x) ln x)
    return -c / ((1 + x) * lx)


def _classical(x, c, lx, M):
    return 1 / lx + 1 / c


def _classical_near_one(c):
    # 1/ln(1-c) + 1/c = 1/2 + c/12 + c**2/24 + 19 c**3/720 + ...
    return 0.5 + c / 12 + c * c / 24 + 19 * c**3 / 720


def _inner_gamma(c, lx):
    # int_0^1 t u/(1 - t u) dt = -1 - ln(1-u)/u,  u = 1 - x = c
    return -1 - lx / c


def _inner_gamma_small(c):
    return c / 2 + c * c / 3 + c**3 / 4 + c**4 / 5


def _via_f(x, c, lx, M):
    return -_inner_gamma(c, lx) / lx


def _unity(x, c, lx, M):
    # int_0^1 u/(1 - t u) dt = -ln(1-u) = -ln x
    inner = -lx
    return -inner / lx


def _f_prime0(t):
    def integrand(x, c, lx, M):
        return -t * t * c / ((1 - t * c) * lx)

    return integrand


def _i_tail(y_cutoff):
    def integrand(x, c, lx, M):
        return c / (1 + x) * M.exp(y_cutoff * lx) / (-lx)

    return integrand


def _float_values(name, integrand, x, c, lx):
    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        f = integrand(x, c, lx, np)
        if name == "classical":
            f = np.where(c < 1e-4, _classical_near_one(c), f)
        elif name == "via_f":
            small = c < 1e-4
            inner = np.where(small, _inner_gamma_small(c), _inner_gamma(c, lx))
            f = -inner / lx
    return f


# ---------------------------------------------------------------------------
# engines


def _check_tol(tol, ctx: PrecisionContext) -> float:
    tol = float(tol)
    if not tol > 0:
        raise ValueError("tol must be positive")
    floor = 10.0 ** (-ctx.digits)
    if tol < floor:
        short = math.ceil(-math.log10(tol)) - ctx.digits
        raise PrecisionExhausted(
            f"tolerance {tol:g} is below the context precision {floor:g}; "
            f"raise the precision by at least {short}",
            required_extra=short,
        )
    return tol


def _refine(level_sum: Callable[[int], tuple[object, int]], tol, max_level: int):
    prev = None
    evals = 0
    est = None
    for level in range(_MIN_LEVEL, max_level + 1):
        s, n = level_sum(level)
        evals += n
        if prev is not None:
            est = SAFETY * abs(s - prev)
            if est <= tol:
                return s, est, evals
        prev = s
    raise PrecisionExhausted(
        f"quadrature did not reach tol={float(tol):g} after {max_level} levels "
        f"(last estimate {float(est):g})"
    )


@lru_cache(maxsize=64)
def _mp_nodes(level: int, dps: int):
    mp = _mp_context(dps)
    h = mp.ldexp(1, -level)
    # beyond t_max the weights drop below 10**-(dps+10)
    t_max = float(mp.asinh((dps + 10) * mp.ln10 / mp.pi)) + 0.25
    m = int(t_max * 2**level)
    nodes = []
    for j in range(-m, m + 1):
        t = j * h
        u = mp.pi / 2 * mp.sinh(t)
        e = mp.exp(-2 * abs(u))
        near = e / (1 + e)
        far = 1 / (1 + e)
        x, c = (near, far) if j < 0 else (far, near)
        lx = mp.log(x) if x < 0.5 else mp.log1p(-c)
        w = h * mp.pi * mp.cosh(t) * e / (1 + e) ** 2
        nodes.append((x, c, lx, w))
    return tuple(nodes)


def _integrate_1d(name: str, integrand, tol, ctx: PrecisionContext, scale=1) -> QuadratureResult:
    tol = _check_tol(tol, ctx)
    mp = ctx.mp
    if tol >= FLOAT_TOL_FLOOR:

        def level_sum(level):
            x, c, lx, w = _kernels.tanh_sinh_nodes(level)
            f = _float_values(name, integrand, x, c, lx)
            return float(scale) * float(np.dot(w, f)), x.shape[0]

        s, est, evals = _refine(level_sum, tol, _MAX_LEVEL_1D)
        return QuadratureResult(mp.mpf(s), mp.mpf(est), evals)

    dps = ctx.working + 5
    mp_hi = _mp_context(dps)

    def level_sum_mp(level):
        nodes = _mp_nodes(level, dps)
        total = mp_hi.fsum(w * integrand(x, c, lx, mp_hi) for x, c, lx, w in nodes)
        return mp_hi.mpf(scale) * total, len(nodes)

    s, est, evals = _refine(level_sum_mp, tol, _MAX_LEVEL_MP)
    return QuadratureResult(mp.mpf(s), mp.mpf(est), evals)


def _integrate_2d(kernel_name: str, tol, ctx: PrecisionContext, kernels=None) -> QuadratureResult:
    tol = _check_tol(tol, ctx)
    if tol < FLOAT_TOL_FLOOR:
        raise PrecisionExhausted(
            f"2-D quadrature runs in float64 and cannot reach tol={tol:g} (floor {FLOAT_TOL_FLOOR:g})"
        )
    kernel = (kernels or _kernels.KERNELS)[kernel_name]

    def level_sum(level):
        x, c, lx, w = _kernels.tanh_sinh_nodes(level)
        return kernel(x, c, lx, w), x.shape[0] ** 2

    s, est, evals = _refine(level_sum, tol, _MAX_LEVEL_2D)
    mp = ctx.mp
    return QuadratureResult(mp.mpf(s), mp.mpf(est), evals)


# ---------------------------------------------------------------------------
# public integrals


def integral_I_reduced(tol, ctx: PrecisionContext) -> QuadratureResult:
    """The x-y integral of ``(1-x)/(1+x) x**y`` with the y-integral done exactly.

    ``int_0^inf x**y dy = -1/ln x`` leaves ``-int_0^1 (1-x)/((1+x) ln x) dx``.
    """
    return _integrate_1d("i_reduced", _i_reduced, tol, ctx)


def integral_ln_pi_over_2(tol, ctx: PrecisionContext) -> QuadratureResult:
    """``-int_0^1 (1-x)/((1+x) ln x) dx = ln(pi/2)``."""
    return integral_I_reduced(tol, ctx)


def double_integral_ln4_over_pi(tol, ctx: PrecisionContext, kernels=None) -> QuadratureResult:
    """``-int int (1-x)/((1+xy) ln xy) dx dy = ln(4/pi)`` over the unit square."""
    return _integrate_2d("ln4_over_pi", tol, ctx, kernels)


def double_integral_gamma(tol=1e-6, ctx: PrecisionContext = None, kernels=None) -> QuadratureResult:
    """``-int int (1-x)/((1-xy) ln xy) dx dy = gamma`` over the unit square.

    The integrand grows like 1/distance at (1, 1).  The tensor tanh-sinh rule
    still converges geometrically there, but the default tolerance is kept at
    1e-6 so the cost stays predictable.
    """
    if ctx is None:
        raise TypeError("a PrecisionContext is required")
    return _integrate_2d("gamma_double", tol, ctx, kernels)


def integral_I_2d(y_cutoff, tol, ctx: PrecisionContext, kernels=None) -> QuadratureResult:
    """``int_0^Y int_0^1 (1-x)/(1+x) x**y dx dy``, truncated at ``Y = y_cutoff``.

    The returned value is the truncated integral.  The neglected part
    ``int_0^1 (1-x)/(1+x) x**Y / (-ln x) dx`` (about 1/(2Y)) is computed by
    :func:`integral_I_tail` and added to the error estimate.
    """
    Y = float(y_cutoff)
    if not Y > 0:
        raise DomainError("y_cutoff must be positive")
    tol = _check_tol(tol, ctx)
    if tol < FLOAT_TOL_FLOOR:
        raise PrecisionExhausted(f"2-D quadrature cannot reach tol={tol:g}")
    kernel = (kernels or _kernels.KERNELS)["i2d"]

    def level_sum(level):
        x, c, lx, w = _kernels.tanh_sinh_nodes(level)
        return kernel(x, c, lx, w, Y * x, Y * w), x.shape[0] ** 2

    s, est, evals = _refine(level_sum, tol, _MAX_LEVEL_2D)
    tail = integral_I_tail(Y, min(tol, 1e-10), ctx)
    mp = ctx.mp
    return QuadratureResult(
        mp.mpf(s),
        mp.mpf(est) + tail.value + tail.error_estimate,
        evals + tail.evaluations,
    )


def integral_I_tail(y_cutoff, tol, ctx: PrecisionContext) -> QuadratureResult:
    """``int_Y^inf int_0^1 (1-x)/(1+x) x**y dx dy``, reduced to one dimension."""
    Y = float(y_cutoff)
    if not Y >= 0:
        raise DomainError("y_cutoff must be non-negative")
    return _integrate_1d("i_tail", _i_tail(Y), tol, ctx)


def f_prime0_integral(t, tol, ctx: PrecisionContext) -> QuadratureResult:
    """``-t**2 int_0^1 (1-x)/((1 - t(1-x)) ln x) dx``, the s-derivative of f(t, s) at 0."""
    t = float(t)
    if not -1 < t < 1:
        raise DomainError(f"t must lie in (-1, 1), got {t}")
    if t == 0:
        mp = ctx.mp
        _check_tol(tol, ctx)
        return QuadratureResult(mp.zero, mp.zero, 1)
    return _integrate_1d("f_prime0", _f_prime0(ctx.mp.mpf(t) if float(tol) < FLOAT_TOL_FLOOR else t), tol, ctx)


def gamma_classical_integral(tol, ctx: PrecisionContext) -> QuadratureResult:
    """``int_0^1 (1/ln x + 1/(1-x)) dx = gamma``."""
    return _integrate_1d("classical", _classical, tol, ctx)


def gamma_via_f_integral(tol, ctx: PrecisionContext) -> QuadratureResult:
    """``int_0^1 f'(t,0)/t dt`` as an iterated integral with the t-integral done in closed form."""
    return _integrate_1d("via_f", _via_f, tol, ctx)


def unity_via_f_integral(tol, ctx: PrecisionContext) -> QuadratureResult:
    """``int_0^1 f'(t,0)/t**2 dt = 1``, again with the t-integral in closed form."""
    return _integrate_1d("unity", _unity, tol, ctx)


# ---------------------------------------------------------------------------
# point evaluation with continuity values at the edges (float64)


def _x_parts(x):
    x = float(x)
    if not 0 <= x <= 1:
        raise DomainError(f"x must lie in [0, 1], got {x}")
    return x, 1.0 - x


def integrand_ln_pi_over_2(x: float) -> float:
    """``-(1-x)/((1+x) ln x)``; 0 at x = 0 and 1/2 at x = 1."""
    x, c = _x_parts(x)
    if x == 0:
        return 0.0
    if x == 1:
        return 0.5
    return -c / ((1 + x) * math.log(x))


def integrand_ln4_over_pi(x: float, y: float) -> float:
    """``-(1-x)/((1+xy) ln xy)``; 0 where x = 1 or xy = 0."""
    x, c = _x_parts(x)
    y, d = _x_parts(y)
    if c == 0 or x * y == 0:
        return 0.0
    return -c / ((1 + x * y) * (math.log(x) + math.log(y)))


def integrand_gamma_double(x: float, y: float) -> float:
    """``-(1-x)/((1-xy) ln xy)``; 0 where xy = 0 and along x = 1 with y < 1."""
    x, c = _x_parts(x)
    y, d = _x_parts(y)
    if x * y == 0:
        return 0.0
    if c == 0:
        if d == 0:
            raise DomainError("the integrand is unbounded at (1, 1)")
        # (1-x)/(1-xy) -> 0, but ln xy -> ln y: the limit is 0 as well
        return 0.0
    return -c / ((c + x * d) * (math.log(x) + math.log(y)))


def integrand_I(x: float, y: float) -> float:
    """``(1-x)/(1+x) * x**y``, the closed-form geometric sum times ``x**y``."""
    x, c = _x_parts(x)
    y = float(y)
    if y < 0:
        raise DomainError("y must be non-negative")
    return c / (1 + x) * (x**y if (x > 0 or y > 0) else 1.0)


def integrand_gamma_classical(x: float) -> float:
    """``1/ln x + 1/(1-x)``; 1 at x = 0 and 1/2 at x = 1."""
    x, c = _x_parts(x)
    if x == 0:
        return 1.0
    if c < 1e-4:
        return _classical_near_one(c)
    return 1 / math.log(x) + 1 / c


def integrand_f_prime0(t: float, x: float) -> float:
    """``-t**2 (1-x)/((1 - t(1-x)) ln x)``; 0 at x = 0, t**2 at x = 1."""
    x, c = _x_parts(x)
    if x == 0:
        return 0.0
    if c == 0:
        return t * t
    return -t * t * c / ((1 - t * c) * math.log(x))


def inner_t_gamma(u: float) -> float:
    """``int_0^1 t u/(1 - t u) dt = -1 - ln(1-u)/u``, 0 at u = 0."""
    if u == 0:
        return 0.0
    if abs(u) < 1e-4:
        return _inner_gamma_small(u)
    return -1 - math.log1p(-u) / u


def inner_t_unity(u: float) -> float:
    """``int_0^1 u/(1 - t u) dt = -ln(1-u)``, 0 at u = 0."""
    return -math.log1p(-u)


def reduced_gamma_via_f(x: float) -> float:
    """``-inner_t_gamma(1-x) / ln x``, which simplifies to ``1/ln x + 1/(1-x)``."""
    x, c = _x_parts(x)
    if x == 0:
        return 1.0
    if c == 0:
        return 0.5
    return -inner_t_gamma(c) / math.log(x)


def reduced_unity_via_f(x: float) -> float:
    """``-inner_t_unity(1-x) / ln x``, identically 1 on (0, 1)."""
    x, c = _x_parts(x)
    if x == 0 or c == 0:
        return 1.0
    return -inner_t_unity(c) / math.log(x)
