"""Partial products for pi/2, e**gamma, e, and the Wallis and Pippenger products.

The three binomial products share their factor bases

    2/1,  2**2/(1*3),  2**3*4/(1*3**3),  2**4*4**4/(1*3**6*5), ...

whose logarithms are :func:`~eulerseries.series.log_core`, and differ only in
the exponent attached to the n-th base: ``1/2**n`` (pi/2), ``1/(n+1)``
(e**gamma) and ``1/n`` (e).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import UnknownConstant
from .precision import PrecisionContext, cancellation_digits, check_finite, reference_constant
from .series import log_cores, weighted_log_core_sum

__all__ = [
    "KINDS",
    "ProductSpec",
    "exponent_schedule",
    "product_partial",
    "product_partials",
    "product_limit_reference",
    "wallis_factor",
    "pippenger_group",
    "pippenger_group_log",
]

_SCHEDULES: dict[str, Callable[[int], Fraction]] = {
    "egamma": lambda n: Fraction(1, n + 1),
    "sondow_pi": lambda n: Fraction(1, 2**n),
    "guillera_e": lambda n: Fraction(1, n),
    "wallis": lambda n: Fraction(1),
    "pippenger": lambda n: Fraction(1, 2**n),
}
KINDS = tuple(_SCHEDULES)
_BINOMIAL_KINDS = ("egamma", "sondow_pi", "guillera_e")


def exponent_schedule(kind: str) -> Callable[[int], Fraction]:
    try:
        return _SCHEDULES[kind]
    except KeyError:
        raise UnknownConstant(f"unknown product kind {kind!r}") from None


@dataclass(frozen=True)
class ProductSpec:
    kind: str
    exponent_schedule: Callable[[int], Fraction] = field(default=None, compare=False)

    def __post_init__(self):
        expected = exponent_schedule(self.kind)
        if self.exponent_schedule is None:
            object.__setattr__(self, "exponent_schedule", expected)
            return
        for n in range(1, 17):
            if Fraction(self.exponent_schedule(n)) != expected(n):
                raise ValueError(f"exponent schedule does not match kind {self.kind!r} at n={n}")


def _as_spec(spec) -> ProductSpec:
    return spec if isinstance(spec, ProductSpec) else ProductSpec(spec)


def wallis_factor(n: int) -> Fraction:
    """``(2n+2)**2 / ((2n+1)(2n+3))``, n >= 0."""
    return Fraction((2 * n + 2) ** 2, (2 * n + 1) * (2 * n + 3))


def _single_ratio(j: int) -> Fraction:
    # 2/1, 2/3, 4/3, 4/5, 6/5, ...
    m = (j + 1) // 2
    return Fraction(2 * m, 2 * m - 1) if j % 2 else Fraction(2 * m, 2 * m + 1)


def pippenger_group(n: int) -> Fraction:
    """Exact product of the ``2**(n-1)`` single Wallis ratios that make up group ``n``.

    Only practical for small n; :func:`pippenger_group_log` is the scalable path.
    """
    out = Fraction(1)
    for j in range(2 ** (n - 1), 2**n):
        out *= _single_ratio(j)
    return out


def _log_wallis_prefix(M: int, mp):
    # ln of the product of the first M single ratios
    if M == 0:
        return mp.zero
    m = M // 2
    lw = 4 * m * mp.ln2 + 4 * mp.loggamma(m + 1) - mp.loggamma(2 * m + 1) - mp.loggamma(2 * m + 2)
    if M % 2:
        lw += mp.log(mp.mpf(2 * m + 2) / (2 * m + 1))
    return lw


def pippenger_group_log(n: int, ctx: PrecisionContext):
    """Logarithm of :func:`pippenger_group` via log-gamma closed forms."""
    if n < 1:
        raise ValueError("group index starts at 1")
    # the two prefixes are about 2**n * n in size and cancel down to O(1)
    mp_hi = ctx.escalated(cancellation_digits(n) + len(str(n)) + 1)
    diff = _log_wallis_prefix(2**n - 1, mp_hi) - _log_wallis_prefix(2 ** (n - 1) - 1, mp_hi)
    return ctx.mp.mpf(diff)


def product_partial(spec, N: int, ctx: PrecisionContext):
    """Product of the first ``N`` factors of the product named by ``spec``.

    ``spec`` is a :class:`ProductSpec` or one of :data:`KINDS`.  Wallis's
    product uses the paired factors ``(2n+2)**2/((2n+1)(2n+3))``; group n of
    Pippenger's product holds ``2**(n-1)`` consecutive single Wallis ratios.
    """
    spec = _as_spec(spec)
    if N < 1:
        raise ValueError("N must be >= 1")
    mp = ctx.mp
    if spec.kind in _BINOMIAL_KINDS:
        return check_finite(mp.exp(weighted_log_core_sum(spec.exponent_schedule, N, ctx)))
    if spec.kind == "wallis":
        num = den = 1
        for n in range(N):
            num *= (2 * n + 2) ** 2
            den *= (2 * n + 1) * (2 * n + 3)
        return check_finite(mp.mpf(num) / den)
    # pippenger
    total = mp.zero
    for n in range(1, N + 1):
        total += mp.ldexp(pippenger_group_log(n, ctx), -n)
    return check_finite(mp.exp(total))


def product_partials(spec, N_max: int, ctx: PrecisionContext) -> list:
    """``[product_partial(spec, n, ctx) for n in 1..N_max]`` in a single pass."""
    spec = _as_spec(spec)
    if N_max < 1:
        raise ValueError("N_max must be >= 1")
    mp = ctx.mp
    out = []
    if spec.kind == "wallis":
        num = den = 1
        for n in range(N_max):
            num *= (2 * n + 2) ** 2
            den *= (2 * n + 1) * (2 * n + 3)
            out.append(check_finite(mp.mpf(num) / den))
        return out
    total = mp.zero
    if spec.kind == "pippenger":
        for n in range(1, N_max + 1):
            total += mp.ldexp(pippenger_group_log(n, ctx), -n)
            out.append(check_finite(mp.exp(total)))
        return out
    for n, core in enumerate(log_cores(N_max, ctx), start=1):
        w = spec.exponent_schedule(n)
        total += core * w.numerator / w.denominator
        out.append(check_finite(mp.exp(total)))
    return out


def product_limit_reference(kind: str, ctx: PrecisionContext):
    """Limit of each product, assembled from the independent reference constants."""
    mp = ctx.mp
    if kind in ("sondow_pi", "wallis"):
        return reference_constant("pi", ctx) / 2
    if kind == "egamma":
        return mp.exp(reference_constant("gamma", ctx))
    if kind == "guillera_e":
        return reference_constant("e", ctx)
    if kind == "pippenger":
        return reference_constant("e", ctx) / 2
    raise UnknownConstant(f"unknown product kind {kind!r}")
