from fractions import Fraction

import mpmath
import pytest

from eulerseries import (
    ProductSpec,
    binomial,
    log_core,
    make_context,
    product_limit_reference,
    product_partial,
    product_partials,
    reference_constant,
)
from eulerseries.products import KINDS, pippenger_group, pippenger_group_log, wallis_factor
from eulerseries.errors import PrecisionExhausted, UnknownConstant


def exact_base(n):
    out = Fraction(1)
    for k in range(n + 1):
        out *= Fraction(k + 1) ** ((-1) ** (k + 1) * binomial(n, k))
    return out


def test_examples(ctx30):
    mp = ctx30.mp
    assert abs(product_partial("sondow_pi", 1, ctx30) - mp.sqrt(2)) < mp.mpf(10) ** -29
    assert mpmath.nstr(product_partial("sondow_pi", 2, ctx30), 11) == "1.5196713713"
    assert product_partial("guillera_e", 1, ctx30) == 2
    assert product_partial("wallis", 2, ctx30) == mp.mpf(64) / 45
    assert abs(product_partial("pippenger", 1, ctx30) - mp.sqrt(2)) < mp.mpf(10) ** -29


def test_egamma_two_factors(ctx30, oracle):
    # sqrt(2) * (4/3)**(1/3); direct evaluation gives 1.5565434325
    expected = oracle.sqrt(2) * oracle.cbrt(oracle.mpf(4) / 3)
    v = product_partial("egamma", 2, ctx30)
    assert abs(oracle.mpf(v) - expected) < oracle.mpf(10) ** -28
    assert mpmath.nstr(v, 11) == "1.5565434325"


def test_limit_references(ctx30):
    assert mpmath.nstr(product_limit_reference("sondow_pi", ctx30), 11) == "1.5707963268"
    assert mpmath.nstr(product_limit_reference("egamma", ctx30), 11) == "1.781072418"
    assert mpmath.nstr(product_limit_reference("pippenger", ctx30), 11) == "1.3591409142"
    assert product_limit_reference("wallis", ctx30) == product_limit_reference("sondow_pi", ctx30)
    with pytest.raises(UnknownConstant):
        product_limit_reference("viete", ctx30)


@pytest.mark.parametrize("n", range(1, 11))
def test_factor_base_exact(n, ctx30):
    mp = ctx30.mp
    b = exact_base(n)
    assert abs(mp.exp(log_core(n, ctx30)) - mp.mpf(b.numerator) / b.denominator) < mp.mpf(10) ** (-ctx30.digits + 5)


def test_wallis_factors():
    assert [wallis_factor(n) for n in range(3)] == [Fraction(4, 3), Fraction(16, 15), Fraction(36, 35)]


def test_pippenger_groups_exact():
    assert pippenger_group(1) == 2
    assert pippenger_group(2) == Fraction(8, 9)
    assert pippenger_group(3) == Fraction(4 * 6 * 6 * 8, 5 * 5 * 7 * 7)


@pytest.mark.parametrize("n", range(1, 13))
def test_pippenger_log_matches_exact(n, ctx30):
    mp = ctx30.mp
    g = pippenger_group(n)
    exact = mp.log(mp.mpf(g.numerator)) - mp.log(mp.mpf(g.denominator))
    assert abs(pippenger_group_log(n, ctx30) - exact) < mp.mpf(10) ** -27


def test_partials_match_singles(ctx30):
    for kind in KINDS:
        many = product_partials(kind, 12, ctx30)
        for n in (1, 6, 12):
            assert abs(many[n - 1] - product_partial(kind, n, ctx30)) < ctx30.mp.mpf(10) ** -27, kind


def test_figure1_ordering(ctx40):
    ref = reference_constant("pi", ctx40) / 2
    sondow = product_partials("sondow_pi", 25, ctx40)
    wallis = product_partials("wallis", 25, ctx40)
    for n in range(2, 26):
        assert abs(sondow[n - 1] - ref) < abs(wallis[n - 1] - ref), n


def test_sondow_regression(ctx40):
    err = abs(product_partial("sondow_pi", 40, ctx40) - reference_constant("pi", ctx40) / 2)
    assert err < 1e-8
    assert err < 1e-14  # oracle run: 8.26e-15


@pytest.mark.parametrize("kind", ["sondow_pi", "pippenger", "wallis"])
def test_fast_kinds_converge(kind, ctx40):
    ref = product_limit_reference(kind, ctx40)
    errs = [abs(p - ref) for p in product_partials(kind, 40, ctx40)]
    tail = errs[10:]
    assert all(b < a for a, b in zip(tail, tail[1:]))
    if kind == "pippenger":
        # oracle run: 1.87e-25 at N = 40, roughly a factor 4 per group
        assert errs[-1] < 2e-25


@pytest.mark.slow
@pytest.mark.parametrize("kind", ["egamma", "guillera_e"])
def test_slow_kinds_converge(kind):
    ctx = make_context(70)
    ref = product_limit_reference(kind, ctx)
    errs = [abs(p - ref) for p in product_partials(kind, 200, ctx)]
    tail = errs[20:]
    assert all(b < a for a, b in zip(tail, tail[1:]))


def test_rate_ordering():
    ctx = make_context(80)
    err = {k: abs(product_partial(k, 100, ctx) - product_limit_reference(k, ctx)) for k in ("sondow_pi", "egamma", "pippenger", "guillera_e")}
    assert err["sondow_pi"] < err["egamma"]
    assert err["pippenger"] < err["guillera_e"]


def test_exhaustion_is_loud():
    with pytest.raises(PrecisionExhausted):
        product_partial("egamma", 100, make_context(10))


def test_spec_validation():
    assert ProductSpec("egamma").exponent_schedule(3) == Fraction(1, 4)
    ProductSpec("guillera_e", lambda n: Fraction(1, n))
    with pytest.raises(ValueError):
        ProductSpec("guillera_e", lambda n: Fraction(1, 2**n))
    with pytest.raises(UnknownConstant):
        ProductSpec("viete")


def test_custom_spec_equivalent(ctx30):
    spec = ProductSpec("sondow_pi", lambda n: Fraction(1, 2**n))
    assert product_partial(spec, 9, ctx30) == product_partial("sondow_pi", 9, ctx30)


def test_bad_N(ctx30):
    with pytest.raises(ValueError):
        product_partial("wallis", 0, ctx30)
