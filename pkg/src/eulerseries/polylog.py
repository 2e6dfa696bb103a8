"""The two-variable generalisation f(t, s) of the alternating zeta function.

    f(t, s) = sum_{n>=0} t**(n+1) sum_{k=0..n} (-1)**k C(n,k) (k+1)**-s,   -1 < t < 1

reduces to eta(s) at t = 1/2 and, for -1 < t <= 1/2, equals
``-F(t/(t-1), s)`` where ``F(t, s) = sum_{k>=1} t**k k**-s`` is the
polylogarithm Li_s(t).  The s-derivative at s = 0 is a power series in t
whose coefficients are the binomial log cores.
"""

from __future__ import annotations

from .errors import DomainError
from .precision import PrecisionContext, check_finite
from .series import binomial_difference, weighted_log_core_sum
from .zeta import _check_complex, _power_table

__all__ = [
    "f_series",
    "F_series",
    "f_via_F",
    "moebius_argument",
    "f_prime0_series",
    "gamma_series_via_f",
    "unity_series_via_f",
]


def _open_unit(t, ctx):
    t = ctx.real(t)
    if not -1 < t < 1:
        raise DomainError(f"t must lie in (-1, 1), got {t}")
    return t


def f_series(t, s, N: int, ctx: PrecisionContext):
    """Partial sum of f(t, s) through outer index ``N``."""
    t = _open_unit(t, ctx)
    s = ctx.complex(s)
    if N < 0:
        raise ValueError("N must be >= 0")
    mp_hi = ctx.for_order(N)
    values = _power_table(mp_hi.mpc(s), N + 1, mp_hi)
    t_hi = mp_hi.mpf(t)
    total = mp_hi.mpc(0)
    tp = t_hi
    for n in range(N + 1):
        total += tp * binomial_difference(values, n, mp_hi)
        tp *= t_hi
    return _check_complex(ctx.mp.mpc(total))


def F_series(t, s, N: int, ctx: PrecisionContext):
    """``sum_{k=1..N} t**k k**-s``; needs -1 <= t < 1, and Re(s) > 0 at t = -1."""
    t = ctx.real(t)
    s = ctx.complex(s)
    if not -1 <= t < 1:
        raise DomainError(f"F needs -1 <= t < 1, got {t}")
    if t == -1 and s.real <= 0:
        raise DomainError("F(-1, s) needs Re(s) > 0")
    if N < 1:
        raise ValueError("N must be >= 1")
    mp = ctx.mp
    powers = _power_table(s, N, mp)
    total = mp.mpc(0)
    tk = mp.one
    for k in range(N):
        tk *= t
        total += tk * powers[k]
    return _check_complex(total)


def moebius_argument(t, ctx: PrecisionContext):
    """The map ``t -> t/(t-1)``, sending (-1, 1/2] onto [-1, 1/2)."""
    t = ctx.real(t)
    return t / (t - 1)


def f_via_F(t, s, N: int, ctx: PrecisionContext):
    """f(t, s) evaluated as ``-F(t/(t-1), s)``, for -1 < t <= 1/2."""
    t = ctx.real(t)
    if not -1 < t <= 0.5:
        raise DomainError(f"f = -F(t/(t-1)) needs -1 < t <= 1/2, got {t}")
    s = ctx.complex(s)
    if t == 0.5 and s.real <= 0:
        raise DomainError("at t = 1/2 the mapped series sits at -1 and needs Re(s) > 0")
    return -F_series(moebius_argument(t, ctx), s, N, ctx)


def f_prime0_series(t, N: int, ctx: PrecisionContext):
    """d/ds f(t, s) at s = 0: ``sum_{n=1..N} t**(n+1) log_core(n)``.

    The n = 0 term is ``t * (-ln 1) = 0``, so ``N = 0`` gives exactly zero.
    """
    t = _open_unit(t, ctx)
    if N < 0:
        raise ValueError("N must be >= 0")
    mp = ctx.mp
    if N == 0:
        return mp.zero
    return check_finite(weighted_log_core_sum(lambda n: t ** (n + 1), N, ctx))


def gamma_series_via_f(N: int, ctx: PrecisionContext):
    """``sum_{n=1..N} log_core(n)/(n+1)``: integral of f'(t,0)/t over [0, 1], term by term.

    Converges slowly (like 1/N) to Euler's constant; ``exp`` of it is the
    N-factor partial product for e**gamma.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    mp = ctx.mp
    return weighted_log_core_sum(lambda n: mp.mpf(1) / (n + 1), N, ctx)


def unity_series_via_f(N: int, ctx: PrecisionContext):
    """``sum_{n=1..N} log_core(n)/n``: integral of f'(t,0)/t**2, tending to 1."""
    if N < 1:
        raise ValueError("N must be >= 1")
    mp = ctx.mp
    return weighted_log_core_sum(lambda n: mp.mpf(1) / n, N, ctx)
