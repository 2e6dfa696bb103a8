"""The alternating zeta function eta(s) = sum_{k>=1} (-1)**(k-1) k**-s.

Two evaluations are provided: the Dirichlet series itself, valid for
Re(s) > 0, and its Euler-transformed form

    eta(s) = sum_{n>=0} 2**-(n+1) sum_{k=0..n} (-1)**k C(n,k) (k+1)**-s,

which converges for every complex s.  Complex powers always use the real
logarithm of the positive integer base.
"""

from __future__ import annotations

import math

from .errors import DomainError
from .precision import PrecisionContext, check_finite
from .series import binomial_difference, weighted_log_core_sum

__all__ = [
    "alt_zeta_dirichlet",
    "dirichlet_terms_for",
    "alt_zeta_global",
    "alt_zeta_deriv_global",
    "ln_pi_over_2_series",
]

# above this many terms the plain partial sum is replaced by the averaged one
_PLAIN_LIMIT = 100_000


def _power_table(s, count, mp):
    # (k+1)**-s for k = 0..count-1
    if s.imag == 0:
        sr = s.real
        return [mp.mpc(mp.power(k, -sr)) for k in range(1, count + 1)]
    return [mp.exp(-s * mp.log(k)) for k in range(1, count + 1)]


def _check_complex(z):
    check_finite(z.real)
    check_finite(z.imag)
    return z


def alt_zeta_dirichlet(s, N: int, ctx: PrecisionContext, averaged: bool = False):
    """Partial sum ``sum_{k=1..N} (-1)**(k-1) k**-s`` of the Dirichlet series.

    With ``averaged=True`` the mean of the partial sums to ``N`` and ``N + 1``
    is returned instead; its error is about half the first difference of the
    terms rather than the first omitted term, which is what makes the series
    usable for Re(s) <= 1.
    """
    mp = ctx.mp
    s = ctx.complex(s)
    if s.real <= 0:
        raise DomainError(f"the Dirichlet series needs Re(s) > 0, got s = {mp.nstr(s, 10)}")
    if N < 1:
        raise ValueError("N must be >= 1")
    count = N + 1 if averaged else N
    if s.imag == 0 and s.real == int(s.real):
        total = mp.mpc(_integer_power_sum(int(s.real), count, mp))
    else:
        if s.imag == 0:
            sr = s.real
            terms = (mp.power(k, -sr) if k % 2 else -mp.power(k, -sr) for k in range(1, count + 1))
        else:
            terms = (mp.exp(-s * mp.log(k)) * (1 if k % 2 else -1) for k in range(1, count + 1))
        total = mp.mpc(mp.fsum(terms))
    if averaged:
        # last = (-1)**N (N+1)**-s
        last = mp.exp(-s * mp.log(N + 1))
        last = last if N % 2 == 0 else -last
        total -= last / 2
    return _check_complex(total)


def _integer_power_sum(m, count, mp):
    # fixed point; each floor division is off by < 1 unit, so 64 spare bits cover count < 2**60
    bits = mp.prec + 64
    one = 1 << bits
    total = 0
    for k in range(1, count + 1):
        q = one // k**m
        total += q if k % 2 else -q
    return mp.mpf((total, -bits))


def dirichlet_terms_for(s, tol: float) -> tuple[int, bool]:
    """Number of terms (and whether to average) for a Dirichlet sum within ``tol``.

    Plain partial sums obey ``|error| <= |(N+1)**-s|``.  When that asks for
    more than 100000 terms the averaged sum is used, whose error is bounded by
    about ``|s| N**-(Re s + 1) / 2``; one extra factor of two is kept as margin.
    """
    s = complex(s)
    sigma = s.real
    if sigma <= 0:
        raise DomainError("Re(s) must be positive")
    n_plain = math.ceil(tol ** (-1.0 / sigma))
    if s.imag == 0 and n_plain <= _PLAIN_LIMIT:
        return n_plain, False
    n_avg = math.ceil((abs(s) / tol) ** (1.0 / (sigma + 1.0)))
    return max(n_avg, 2), True


def _global_sum(values, N, mp):
    total = mp.zero
    for n in range(N + 1):
        total += binomial_difference(values, n, mp) * mp.ldexp(1, -(n + 1))
    return total


def alt_zeta_global(s, N: int, ctx: PrecisionContext):
    """Globally convergent series for eta(s), truncated after outer index ``N``."""
    if N < 0:
        raise ValueError("N must be >= 0")
    s = ctx.complex(s)
    mp_hi = ctx.for_order(N)
    s_hi = mp_hi.mpc(s)
    values = _power_table(s_hi, N + 1, mp_hi)
    return _check_complex(ctx.mp.mpc(_global_sum(values, N, mp_hi)))


def alt_zeta_deriv_global(s, N: int, ctx: PrecisionContext):
    """Termwise s-derivative of :func:`alt_zeta_global`.

    At s = 0 the sum is routed through :func:`ln_pi_over_2_series`, so
    ``2 * alt_zeta_deriv_global(0, N) == ln_pi_over_2_series(N)`` holds exactly.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    s = ctx.complex(s)
    mp = ctx.mp
    if s == 0:
        if N == 0:
            return mp.mpc(0)
        return mp.mpc(mp.ldexp(ln_pi_over_2_series(N, ctx), -1))
    mp_hi = ctx.for_order(N)
    s_hi = mp_hi.mpc(s)
    powers = _power_table(s_hi, N + 1, mp_hi)
    values = [-mp_hi.log(k + 1) * p for k, p in enumerate(powers)]
    return _check_complex(mp.mpc(_global_sum(values, N, mp_hi)))


def ln_pi_over_2_series(N: int, ctx: PrecisionContext):
    """``sum_{n=1..N} 2**-n * log_core(n)``, which tends to ln(pi/2)."""
    if N < 1:
        raise ValueError("N must be >= 1")
    mp = ctx.mp
    return weighted_log_core_sum(lambda n: mp.ldexp(1, -n), N, ctx)
