"""Working-precision contexts, exact binomials and independent reference constants.

Every high-precision value in the package is an ``mpmath`` number bound to a
private :class:`mpmath.MPContext`, one per working precision.  Nothing here
touches the global ``mpmath.mp`` object, so contexts can be shared freely
between threads.

The reference constants are computed from scratch with Python integers in
fixed point (Machin's arctangent formula, the factorial series, an atanh
series and the Brent-McMillan algorithm).  They deliberately share no code with
the series, products and integrals they are used to check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import mpmath

from .errors import InvalidPrecision, PrecisionExhausted, UnknownConstant

__all__ = [
    "PrecisionContext",
    "make_context",
    "binomial",
    "cancellation_digits",
    "reference_constant",
    "REFERENCE_NAMES",
]

MIN_DIGITS = 10
# decimal digits lost per unit of n in a binomially weighted alternating sum
LOSS_PER_INDEX = 0.302


@lru_cache(maxsize=None)
def _mp_context(dps: int) -> mpmath.MPContext:
    mp = mpmath.MPContext()
    mp.dps = dps
    return mp


def cancellation_digits(n: int) -> int:
    """Extra digits needed to absorb the cancellation in an order-``n`` difference."""
    return math.ceil(n * LOSS_PER_INDEX)


@dataclass(frozen=True)
class PrecisionContext:
    """Requested accuracy plus guard digits.

    ``max_extra`` caps the automatic escalation used for cancellation-prone
    inner sums; exceeding it raises :class:`PrecisionExhausted` rather than
    silently computing at a precision nobody asked for.
    """

    digits: int
    guard: int
    max_extra: int

    def __post_init__(self):
        if self.digits < MIN_DIGITS:
            raise InvalidPrecision(f"digits must be >= {MIN_DIGITS}, got {self.digits}")
        if self.guard < 0 or self.max_extra < 0:
            raise InvalidPrecision("guard and max_extra must be non-negative")

    @property
    def working(self) -> int:
        return self.digits + self.guard

    @property
    def mp(self) -> mpmath.MPContext:
        return _mp_context(self.working)

    @property
    def eps(self):
        return self.mp.mpf(10) ** (-self.digits)

    def escalated(self, extra: int) -> mpmath.MPContext:
        """Context carrying ``extra`` more digits than the working precision."""
        if extra > self.max_extra:
            short = extra - self.max_extra
            raise PrecisionExhausted(
                f"needs {extra} extra working digits but only {self.max_extra} are "
                f"allowed at {self.digits} digits; raise the precision by at least {short}",
                required_extra=short,
            )
        return _mp_context(self.working + max(extra, 0))

    def for_order(self, n: int) -> mpmath.MPContext:
        """Context wide enough for an order-``n`` binomial difference."""
        return self.escalated(cancellation_digits(n))

    def real(self, value):
        """Round ``value`` (float, str, int, mpf) into this context and check it is finite."""
        v = self.mp.mpf(value)
        return check_finite(v)

    def complex(self, value):
        v = self.mp.mpc(value)
        check_finite(v.real)
        check_finite(v.imag)
        return v


def make_context(digits: int, guard: int | None = None, max_extra: int | None = None) -> PrecisionContext:
    """Build a :class:`PrecisionContext`.

    The default guard is ``max(10, ceil(digits / 10))``; the default escalation
    budget equals the working precision, i.e. inner sums may at most double it.
    """
    if not isinstance(digits, int) or digits < MIN_DIGITS:
        raise InvalidPrecision(f"digits must be an integer >= {MIN_DIGITS}, got {digits!r}")
    if guard is None:
        guard = max(10, math.ceil(digits / 10))
    if max_extra is None:
        max_extra = digits + guard
    return PrecisionContext(digits, guard, max_extra)


def check_finite(x):
    if not mpmath.isfinite(x):
        raise OverflowError(f"non-finite intermediate value {x}")
    return x


def binomial(n: int, k: int) -> int:
    """Exact C(n, k); zero outside ``0 <= k <= n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


# ---------------------------------------------------------------------------
# reference constants, fixed-point integer arithmetic scaled by 2**bits


def _atan_inv(q: int, one: int) -> int:
    # arctan(1/q)
    total = 0
    term = one // q
    q2 = q * q
    k = 0
    while term:
        if k % 2:
            total -= term // (2 * k + 1)
        else:
            total += term // (2 * k + 1)
        term //= q2
        k += 1
    return total


def _atanh_inv(q: int, one: int) -> int:
    # artanh(1/q)
    total = 0
    term = one // q
    q2 = q * q
    k = 0
    while term:
        total += term // (2 * k + 1)
        term //= q2
        k += 1
    return total


def _pi_fixed(bits: int) -> int:
    one = 1 << bits
    return 4 * (4 * _atan_inv(5, one) - _atan_inv(239, one))


def _e_fixed(bits: int) -> int:
    one = 1 << bits
    total = 0
    term = one
    k = 0
    while term:
        total += term
        k += 1
        term //= k
    return total


def _ln2_fixed(bits: int) -> int:
    return 2 * _atanh_inv(3, 1 << bits)


def _gamma_fixed(bits: int) -> int:
    # Brent-McMillan: gamma = U/V - ln n, error about pi*exp(-4n)
    one = 1 << bits
    need = bits * math.log(2) / 4 + 2
    m = max(1, math.ceil(math.log2(need)))
    n = 1 << m
    a = -m * _ln2_fixed(bits)
    b = one
    u, v = a, b
    n2 = n * n
    k = 1
    while a or b:
        b = b * n2 // (k * k)
        a = (a * n2 // k + b) // k
        u += a
        v += b
        k += 1
    return u * one // v


_FIXED = {
    "pi": _pi_fixed,
    "e": _e_fixed,
    "ln2": _ln2_fixed,
    "gamma": _gamma_fixed,
}

REFERENCE_NAMES = tuple(_FIXED)


@lru_cache(maxsize=64)
def _reference_fixed(name: str, bits: int) -> int:
    return _FIXED[name](bits)


def reference_constant(name: str, ctx: PrecisionContext):
    """Return pi, gamma, e or ln2 correct to the full working precision of ``ctx``."""
    if name not in _FIXED:
        raise UnknownConstant(f"unknown constant {name!r}; expected one of {', '.join(_FIXED)}")
    bits = math.ceil(ctx.working * math.log2(10)) + 64
    # man * 2**-bits; the guard bits absorb the truncation of every integer division
    return ctx.mp.mpf((_reference_fixed(name, bits), -bits))
