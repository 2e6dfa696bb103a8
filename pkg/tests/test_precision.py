import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from eulerseries import binomial, make_context, reference_constant
from eulerseries.errors import InvalidPrecision, PrecisionExhausted, UnknownConstant
from eulerseries.precision import cancellation_digits


def test_default_guard():
    ctx = make_context(50)
    assert ctx.guard == 10
    assert ctx.working >= 60
    assert ctx.mp.dps == ctx.working


def test_explicit_zero_guard():
    ctx = make_context(10, 0)
    assert ctx.working == 10


def test_guard_scales_with_digits():
    assert make_context(300).guard == 30


@pytest.mark.parametrize("digits", [5, 9, 0, -3])
def test_too_few_digits(digits):
    with pytest.raises(InvalidPrecision):
        make_context(digits)


def test_escalation_budget():
    ctx = make_context(20)
    assert ctx.for_order(40).dps == ctx.working + cancellation_digits(40)
    with pytest.raises(PrecisionExhausted) as info:
        ctx.escalated(ctx.max_extra + 7)
    assert info.value.required_extra == 7


def test_contexts_are_independent():
    a, b = make_context(20), make_context(60)
    assert a.mp is not b.mp
    assert a.mp.dps == 30 and b.mp.dps == 70
    assert mpmath.mp.dps == 15


def test_non_finite_rejected(ctx30):
    with pytest.raises(OverflowError):
        ctx30.real("inf")


@pytest.mark.parametrize("n, k, expected", [(4, 2, 6), (7, 0, 1), (0, 0, 1), (3, 5, 0), (3, -1, 0), (10, 10, 1)])
def test_binomial_values(n, k, expected):
    assert binomial(n, k) == expected


def test_binomial_pascal_exhaustive():
    for n in range(1, 201):
        for k in range(1, n + 1):
            assert binomial(n - 1, k - 1) + binomial(n - 1, k) == binomial(n, k)


def test_binomial_row_sums_exhaustive():
    for n in range(1, 201):
        row = [binomial(n, k) for k in range(n + 1)]
        assert sum(row) == 2**n
        assert sum((-1) ** k * c for k, c in enumerate(row)) == 0


@given(st.integers(0, 400), st.integers(-5, 405))
def test_binomial_symmetry(n, k):
    assert binomial(n, k) == binomial(n, n - k)


PUBLISHED = {
    "pi": "3.14159265358979323846264338327950288419716939937510582097494459230781640628620899862803482534211706798214808651",
    "gamma": "0.57721566490153286060651209008240243104215933593992359880576723488486772677766467093694706329174674951463144724980708",
    "e": "2.71828182845904523536028747135266249775724709369995957496696762772407663035354759457138217852516642742746639193200305",
    "ln2": "0.69314718055994530941723212145817656807550013436025525412068000949339362196969471560586332699641868754200148102057068",
}


@pytest.mark.parametrize("name", sorted(PUBLISHED))
def test_reference_matches_published_digits(name):
    ctx = make_context(100)
    v = reference_constant(name, ctx)
    assert abs(v - ctx.mp.mpf(PUBLISHED[name])) < ctx.mp.mpf(10) ** -105


@pytest.mark.parametrize(
    "name, digits, text",
    [
        ("pi", 30, "3.14159265358979323846264338328"),
        ("gamma", 20, "0.57721566490153286061"),
        ("ln2", 20, "0.69314718055994530942"),
    ],
)
def test_reference_examples(name, digits, text):
    ctx = make_context(digits)
    assert mpmath.nstr(reference_constant(name, ctx), len(text.replace(".", "").lstrip("0"))) == text


@pytest.mark.parametrize("name", ["pi", "gamma", "e", "ln2"])
def test_reference_against_mpmath_at_2000_digits(name):
    ctx = make_context(2000)
    mp = mpmath.MPContext()
    mp.dps = 2020
    truth = {"pi": mp.pi, "gamma": mp.euler, "e": mp.e, "ln2": mp.ln2}[name]
    assert abs(mp.mpf(reference_constant(name, ctx)) - truth) < mp.mpf(10) ** -2005


def test_reference_bit_for_bit(ctx40):
    a = reference_constant("gamma", ctx40)
    reference_constant.__globals__["_reference_fixed"].cache_clear()
    b = reference_constant("gamma", ctx40)
    assert a._mpf_ == b._mpf_


def test_unknown_constant(ctx30):
    with pytest.raises(UnknownConstant):
        reference_constant("tau", ctx30)


def test_cancellation_digits():
    assert cancellation_digits(0) == 0
    assert cancellation_digits(100) == math.ceil(30.2)
