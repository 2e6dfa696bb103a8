"""High-precision series, products and integrals around the alternating zeta function.

Quick start::

    >>> from eulerseries import make_context, product_partial
    >>> ctx = make_context(30)
    >>> product_partial("sondow_pi", 40, ctx)   # tends to pi/2
"""

from .errors import DomainError, EulerSeriesError, InvalidPrecision, PrecisionExhausted, UnknownConstant
from .integrals import (
    QuadratureResult,
    double_integral_gamma,
    double_integral_ln4_over_pi,
    f_prime0_integral,
    gamma_classical_integral,
    gamma_via_f_integral,
    integral_I_2d,
    integral_I_reduced,
    integral_I_tail,
    integral_ln_pi_over_2,
    unity_via_f_integral,
)
from .polylog import F_series, f_prime0_series, f_series, f_via_F, gamma_series_via_f, unity_series_via_f
from .precision import PrecisionContext, binomial, make_context, reference_constant
from .products import ProductSpec, product_limit_reference, product_partial, product_partials
from .series import (
    ConvergenceTrace,
    SeriesSpec,
    alternating_partial,
    convergence_trace,
    euler_transform_partial,
    finite_series,
    harmonic_series,
    log_core,
    wallis_log_series,
)
from .zeta import alt_zeta_deriv_global, alt_zeta_dirichlet, alt_zeta_global, dirichlet_terms_for, ln_pi_over_2_series

__version__ = "0.1.0"
