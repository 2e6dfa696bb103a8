"""Alternating series, Euler's transformation and the binomial log core.

The Euler transform of ``sum_{n>=1} (-1)**(n-1) * a_n`` is

    sum_{n>=0} 2**-(n+1) * sum_{k=0..n} (-1)**k * C(n, k) * a_{k+1}

and its inner sums cancel heavily: the terms are of size ``2**n`` while the
result is usually below one.  Every inner sum here is therefore evaluated at
``ctx.working + ceil(0.302 n)`` digits, with exact integer binomials, adding
positive and negative contributions separately and subtracting once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterator, Sequence

import mpmath

from .precision import PrecisionContext, _mp_context, binomial, check_finite

__all__ = [
    "SeriesSpec",
    "TraceEntry",
    "ConvergenceTrace",
    "binomial_difference",
    "log_core",
    "log_cores",
    "alternating_partial",
    "euler_transform_partial",
    "convergence_trace",
    "weighted_log_core_sum",
    "wallis_log_series",
    "harmonic_series",
    "finite_series",
]


@dataclass(frozen=True)
class SeriesSpec:
    """Terms ``a_n`` (n >= 1) of the alternating series ``sum (-1)**(n-1) a_n``.

    ``term(n, mp)`` must return ``a_n`` as a number of the mpmath context ``mp``
    and must be deterministic.  The context is passed in because the Euler
    transform evaluates the terms above working precision.
    """

    term: Callable[[int, mpmath.MPContext], object]
    name: str = "series"

    def __call__(self, n: int, mp: mpmath.MPContext):
        return self.term(n, mp)


def wallis_log_series() -> SeriesSpec:
    """``a_n = ln((n+1)/n)``: the logarithm of Wallis's product, ungrouped."""
    return SeriesSpec(lambda n, mp: mp.log1p(mp.mpf(1) / n), "wallis_log")


def harmonic_series() -> SeriesSpec:
    """``a_n = 1/n``, whose alternating sum is ln 2."""
    return SeriesSpec(lambda n, mp: mp.mpf(1) / n, "harmonic")


def finite_series(coefficients: Sequence) -> SeriesSpec:
    """Series with ``a_n = coefficients[n-1]`` and zero beyond; rationals stay exact until rounding."""
    coeffs = tuple(Fraction(c) for c in coefficients)

    def term(n, mp):
        if n > len(coeffs):
            return mp.zero
        c = coeffs[n - 1]
        return mp.mpf(c.numerator) / c.denominator

    return SeriesSpec(term, f"finite[{len(coeffs)}]")


def binomial_difference(values: Sequence, n: int, mp: mpmath.MPContext):
    """``sum_{k=0..n} (-1)**k C(n,k) values[k]`` with a single final subtraction.

    ``values`` may be real or complex mpmath numbers; the caller is responsible
    for handing in values (and ``mp``) wide enough for the cancellation.
    """
    if len(values) < n + 1:
        raise ValueError(f"need {n + 1} values, got {len(values)}")
    plus = mp.fsum(binomial(n, k) * values[k] for k in range(0, n + 1, 2))
    minus = mp.fsum(binomial(n, k) * values[k] for k in range(1, n + 1, 2))
    return plus - minus


@lru_cache(maxsize=128)
def _log_table(count: int, dps: int) -> tuple:
    # ln(1), ln(2), ..., ln(count)
    mp = _mp_context(dps)
    return tuple(mp.log(k) for k in range(1, count + 1))


def log_cores(n_max: int, ctx: PrecisionContext) -> list:
    """``[log_core(1), ..., log_core(n_max)]`` sharing one table of logarithms."""
    if n_max < 1:
        return []
    mp_hi = ctx.for_order(n_max)
    logs = _log_table(n_max + 1, mp_hi.dps)
    out = []
    for n in range(1, n_max + 1):
        # (-1)**(k+1) = -(-1)**k
        core = -binomial_difference(logs, n, mp_hi)
        out.append(check_finite(ctx.mp.mpf(core)))
    return out


def log_core(n: int, ctx: PrecisionContext):
    """``sum_{k=0..n} (-1)**(k+1) C(n,k) ln(k+1)``.

    This is the logarithm of the rational number
    ``prod (k+1)**((-1)**(k+1) C(n,k))``, the base of the n-th factor of the
    binomial products for pi/2, e**gamma and e: ln 2, ln(4/3), ln(32/27), ...
    """
    if n < 1:
        raise ValueError("log_core needs n >= 1")
    mp_hi = ctx.for_order(n)
    logs = _log_table(n + 1, mp_hi.dps)
    return check_finite(ctx.mp.mpf(-binomial_difference(logs, n, mp_hi)))


def weighted_log_core_sum(weight: Callable[[int], object], N: int, ctx: PrecisionContext):
    """``sum_{n=1..N} weight(n) * log_core(n)``, accumulated in ascending n.

    ``weight`` may return ints, Fractions or mpmath numbers.
    """
    mp = ctx.mp
    total = mp.zero
    for n, core in enumerate(log_cores(N, ctx), start=1):
        w = weight(n)
        if isinstance(w, Fraction):
            total += core * w.numerator / w.denominator
        else:
            total += core * w
    return check_finite(total)


def alternating_partial(series: SeriesSpec, N: int, ctx: PrecisionContext):
    """``sum_{n=1..N} (-1)**(n-1) a_n`` added in ascending order."""
    if N < 1:
        raise ValueError("N must be >= 1")
    mp = ctx.mp
    total = mp.zero
    for n in range(1, N + 1):
        a = series(n, mp)
        total = total + a if n % 2 else total - a
    return check_finite(total)


def euler_transform_partial(series: SeriesSpec, N: int, ctx: PrecisionContext):
    """Euler transform of ``series`` truncated after outer index ``N`` (from 0)."""
    if N < 0:
        raise ValueError("N must be >= 0")
    mp_hi = ctx.for_order(N)
    a = [series(k, mp_hi) for k in range(1, N + 2)]
    total = mp_hi.zero
    for n in range(N + 1):
        total += mp_hi.ldexp(binomial_difference(a, n, mp_hi), -(n + 1))
    return check_finite(ctx.mp.mpf(total))


@dataclass(frozen=True)
class TraceEntry:
    n: int
    partial: object
    abs_error: object


@dataclass(frozen=True)
class ConvergenceTrace:
    entries: tuple[TraceEntry, ...]
    reference: object

    def __post_init__(self):
        idx = [e.n for e in self.entries]
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise ValueError("trace indices must be strictly increasing")

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[TraceEntry]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    @property
    def errors(self) -> list:
        return [e.abs_error for e in self.entries]


def convergence_trace(
    partials: Callable[[int], object],
    reference,
    N_max: int,
    ctx: PrecisionContext,
) -> ConvergenceTrace:
    """Evaluate ``partials(n)`` for n = 1..N_max and record ``|partial - reference|``."""
    if N_max < 1:
        raise ValueError("N_max must be >= 1")
    mp = ctx.mp
    ref = mp.mpf(reference)
    entries = []
    for n in range(1, N_max + 1):
        p = mp.mpf(partials(n))
        entries.append(TraceEntry(n, p, abs(p - ref)))
    return ConvergenceTrace(tuple(entries), ref)
