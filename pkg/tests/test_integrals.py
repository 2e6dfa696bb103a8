import math

import mpmath
import numpy as np
import pytest

from eulerseries import (
    QuadratureResult,
    double_integral_gamma,
    double_integral_ln4_over_pi,
    f_prime0_integral,
    f_prime0_series,
    gamma_classical_integral,
    gamma_via_f_integral,
    integral_I_2d,
    integral_I_reduced,
    integral_I_tail,
    integral_ln_pi_over_2,
    make_context,
    reference_constant,
    unity_via_f_integral,
)
from eulerseries import integrals as ig
from eulerseries.errors import DomainError, PrecisionExhausted


@pytest.fixture(scope="module")
def refs():
    ctx = make_context(40)
    pi = reference_constant("pi", ctx)
    mp = ctx.mp
    return {
        "ln_pi_over_2": mp.log(pi / 2),
        "ln4_over_pi": mp.log(4 / pi),
        "gamma": reference_constant("gamma", ctx),
        "ln2": reference_constant("ln2", ctx),
    }


def test_ln_pi_over_2(ctx30, refs):
    r = integral_ln_pi_over_2(1e-10, ctx30)
    assert abs(r.value - refs["ln_pi_over_2"]) < 1e-10
    assert mpmath.nstr(refs["ln_pi_over_2"], 10) == "0.4515827053"


def test_ln4_over_pi(ctx30, refs):
    r = double_integral_ln4_over_pi(1e-6, ctx30)
    assert abs(r.value - refs["ln4_over_pi"]) < 1e-6
    assert mpmath.nstr(refs["ln4_over_pi"], 10) == "0.2415644753"


def test_change_of_variables(ctx30, refs):
    lhs = refs["ln2"] - integral_ln_pi_over_2(1e-10, ctx30).value
    assert abs(lhs - double_integral_ln4_over_pi(1e-6, ctx30).value) < 1e-6


def test_gamma_double(ctx30, refs):
    r = double_integral_gamma(1e-6, ctx30)
    assert abs(r.value - refs["gamma"]) < 1e-6


def test_gamma_double_needs_context():
    with pytest.raises(TypeError):
        double_integral_gamma(1e-6)


def test_gamma_classical(ctx30, refs):
    assert abs(gamma_classical_integral(1e-8, ctx30).value - refs["gamma"]) < 1e-8


def test_gamma_via_f(ctx30, refs):
    r = gamma_via_f_integral(1e-6, ctx30)
    assert abs(r.value - refs["gamma"]) < 1e-6
    assert abs(r.value - gamma_classical_integral(1e-8, ctx30).value) < 1e-6


def test_unity(ctx30):
    assert abs(unity_via_f_integral(1e-6, ctx30).value - 1) < 1e-6


def test_f_prime0(ctx30, refs):
    r = f_prime0_integral(0.5, 1e-8, ctx30)
    assert abs(r.value - refs["ln_pi_over_2"] / 2) < 1e-8
    assert f_prime0_integral(0, 1e-8, ctx30).value == 0
    series = f_prime0_series(0.25, 60, ctx30)
    assert abs(f_prime0_integral(0.25, 1e-10, ctx30).value - series) < 1e-8


@pytest.mark.parametrize("t", [-1, 1, 1.5])
def test_f_prime0_domain(t, ctx30):
    with pytest.raises(DomainError):
        f_prime0_integral(t, 1e-8, ctx30)


def test_I_2d(ctx30, refs):
    r = integral_I_2d(200, 1e-6, ctx30)
    assert abs(r.value - refs["ln_pi_over_2"]) <= r.error_estimate
    tail = integral_I_tail(200, 1e-10, ctx30)
    # the truncated integral plus its computed tail closes the gap
    assert abs(r.value + tail.value - refs["ln_pi_over_2"]) < 1e-6


def test_I_tail_at_zero_is_whole_integral(ctx30):
    assert abs(integral_I_tail(0, 1e-10, ctx30).value - integral_I_reduced(1e-10, ctx30).value) < 1e-12


def test_I_2d_domain(ctx30):
    with pytest.raises(DomainError):
        integral_I_2d(0, 1e-6, ctx30)


def test_pipeline_equality(ctx30):
    a = integral_ln_pi_over_2(1e-10, ctx30)
    b = integral_I_reduced(1e-10, ctx30)
    assert a == b


@pytest.mark.parametrize("tol", [1e-14, 1e-20])
def test_mp_path(tol, refs):
    ctx = make_context(30)
    r = integral_ln_pi_over_2(tol, ctx)
    assert abs(r.value - refs["ln_pi_over_2"]) < tol
    r = gamma_classical_integral(tol, ctx)
    assert abs(r.value - refs["gamma"]) < tol


def test_tol_below_context(ctx30):
    with pytest.raises(PrecisionExhausted) as info:
        integral_ln_pi_over_2(1e-35, ctx30)
    assert info.value.required_extra == 5


def test_2d_float_floor(ctx30):
    with pytest.raises(PrecisionExhausted):
        double_integral_ln4_over_pi(1e-13, ctx30)


@pytest.mark.parametrize("tol", [0, -1e-6])
def test_bad_tol(tol, ctx30):
    with pytest.raises(ValueError):
        gamma_classical_integral(tol, ctx30)


@pytest.mark.parametrize(
    "fn, oracle",
    [
        (integral_ln_pi_over_2, "ln_pi_over_2"),
        (gamma_classical_integral, "gamma"),
    ],
)
def test_refinement_monotone(fn, oracle, ctx30, refs):
    tols = [1e-4 / 2**k for k in range(0, 20, 3)]
    errs = [abs(fn(t, ctx30).value - refs[oracle]) for t in tols]
    for a, b in zip(errs, errs[1:]):
        # float64 sums carry about 1e-16 of rounding noise near the floor
        assert b <= a + 1e-15


@pytest.mark.parametrize(
    "call, oracle",
    [
        (lambda c: integral_ln_pi_over_2(1e-10, c), "ln_pi_over_2"),
        (lambda c: double_integral_ln4_over_pi(1e-6, c), "ln4_over_pi"),
        (lambda c: double_integral_gamma(1e-6, c), "gamma"),
        (lambda c: gamma_classical_integral(1e-8, c), "gamma"),
        (lambda c: gamma_via_f_integral(1e-6, c), "gamma"),
        (lambda c: integral_I_2d(200, 1e-6, c), "ln_pi_over_2"),
        (lambda c: gamma_classical_integral(1e-20, c), "gamma"),
    ],
)
def test_estimate_soundness(call, oracle, ctx30, refs):
    r = call(ctx30)
    assert abs(r.value - refs[oracle]) <= r.error_estimate


def test_result_validation():
    with pytest.raises(ValueError):
        QuadratureResult(0.0, -1.0, 1)
    with pytest.raises(ValueError):
        QuadratureResult(0.0, 0.0, 0)


def test_continuity_values():
    assert ig.integrand_ln_pi_over_2(1) == 0.5
    assert ig.integrand_ln_pi_over_2(0) == 0
    assert ig.integrand_ln_pi_over_2(1 - 1e-9) == pytest.approx(0.5, abs=1e-8)
    assert ig.integrand_ln4_over_pi(1, 0.3) == 0
    assert ig.integrand_gamma_double(0, 0.4) == 0
    assert ig.integrand_gamma_double(1e-300, 0.4) == pytest.approx(0, abs=1e-2)
    assert ig.integrand_I(0.3, 0) == pytest.approx(0.7 / 1.3)
    assert ig.integrand_gamma_classical(1) == 0.5
    assert ig.integrand_gamma_classical(0) == 1
    assert ig.integrand_f_prime0(0.5, 1) == 0.25
    assert ig.inner_t_gamma(0) == 0
    assert ig.inner_t_unity(0) == 0
    with pytest.raises(DomainError):
        ig.integrand_gamma_double(1, 1)
    with pytest.raises(DomainError):
        ig.integrand_ln_pi_over_2(1.5)


def test_spot_values():
    assert ig.integrand_gamma_double(0.5, 0.5) == pytest.approx(0.5 / (0.75 * -math.log(0.25)), rel=1e-15)
    assert f"{ig.integrand_gamma_double(0.5, 0.5):.10f}" == "0.4808983470"
    assert f"{ig.integrand_gamma_classical(0.5):.10f}" == "0.5573049591"
    assert ig.reduced_unity_via_f(0.5) == pytest.approx(1, abs=1e-15)


@pytest.mark.parametrize("c", [1e-3, 1e-5, 1e-7, 1e-9])
def test_near_one_expansions(c, oracle):
    x = oracle.mpf(1) - oracle.mpf(c)
    classical = 1 / oracle.log(x) + 1 / oracle.mpf(c)
    assert ig.integrand_gamma_classical(1 - c) == pytest.approx(float(classical), rel=1e-12)
    inner = -1 - oracle.log(x) / oracle.mpf(c)
    assert ig.inner_t_gamma(c) == pytest.approx(float(inner), rel=1e-12)


@pytest.mark.parametrize("x", np.linspace(0.01, 0.99, 13))
def test_via_f_reduces_to_classical(x):
    assert ig.reduced_gamma_via_f(x) == pytest.approx(ig.integrand_gamma_classical(x), rel=1e-12)
    assert ig.reduced_unity_via_f(x) == pytest.approx(1, rel=1e-14)
