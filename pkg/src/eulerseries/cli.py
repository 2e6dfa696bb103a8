"""Command-line front end.

    eulerseries compute --constant C --method M --precision D [--terms N | --tol T] [--format text|json]
    eulerseries bench figure1 --n-max N --out PATH [--format csv|json]
    eulerseries bench kernels [--levels ...] [--repeats R]
    eulerseries zeta --s STR --method M --terms N --precision D
    eulerseries trace --constant C --method M --n-max N --precision D [--format csv|json]

Exit codes: 0 success, 2 usage/domain error, 3 precision exhausted, 4 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time
from dataclasses import dataclass
from decimal import ROUND_HALF_EVEN, Context, Decimal
from typing import Callable

import mpmath

from .errors import DomainError, EulerSeriesError, InvalidPrecision, PrecisionExhausted
from .integrals import (
    double_integral_gamma,
    double_integral_ln4_over_pi,
    f_prime0_integral,
    gamma_classical_integral,
    gamma_via_f_integral,
    integral_ln_pi_over_2,
    unity_via_f_integral,
)
from .polylog import F_series, f_prime0_series, gamma_series_via_f, unity_series_via_f
from .precision import PrecisionContext, make_context, reference_constant
from .products import product_partial, product_partials
from .series import convergence_trace, euler_transform_partial, harmonic_series, wallis_log_series
from .zeta import alt_zeta_deriv_global, alt_zeta_dirichlet, alt_zeta_global, ln_pi_over_2_series

EXIT_USAGE = 2
EXIT_PRECISION = 3
EXIT_IO = 4

DEFAULT_SIG = 20
FIGURE1_DIGITS = 40
FIGURE1_HEADER = ("n", "wallis", "sondow", "wallis_err", "sondow_err")
TRACE_HEADER = ("n", "value", "abs_error")


def format_decimal(x, sig: int = DEFAULT_SIG) -> str:
    """Exact binary-to-decimal conversion, then rounding to ``sig`` digits half-even."""
    if not hasattr(x, "_mpf_"):
        x = mpmath.mpf(x)
    # raw tuple: going through mpmath.mpf would re-round to the global 53-bit context
    sign, man, exp, _ = x._mpf_
    man, exp = (-1) ** sign * int(man), int(exp)
    if man == 0:
        return "0"
    d = Decimal(man << exp) if exp >= 0 else Decimal(man * 5 ** (-exp)).scaleb(exp)
    return str(Context(prec=sig, rounding=ROUND_HALF_EVEN).plus(d))


# ---------------------------------------------------------------------------
# legality table


@dataclass(frozen=True)
class Method:
    """One legal (constant, method) pair.

    ``compute(ctx, arg)`` returns ``(value, count)``; ``arg`` is the number of
    terms or the quadrature tolerance depending on ``param``.
    """

    param: str  # "terms" or "tol"
    default: object
    compute: Callable[[PrecisionContext, object], tuple]


def _quad(fn, scale=1, transform=None):
    def run(ctx, tol):
        r = fn(tol, ctx)
        v = r.value * scale
        return (transform(ctx, v) if transform else v), r.evaluations

    return run


def _terms(fn):
    def run(ctx, n):
        return fn(ctx, n), n

    return run


def _exp(ctx, v):
    return ctx.mp.exp(v)


def _real(z):
    # each precision context has its own mpc class, so test the protocol
    return z.real if hasattr(z, "_mpc_") else z


METHODS: dict[tuple[str, str], Method] = {
    ("pi_over_2", "product:sondow"): Method("terms", 40, _terms(lambda c, n: product_partial("sondow_pi", n, c))),
    ("pi_over_2", "product:wallis"): Method("terms", 40, _terms(lambda c, n: product_partial("wallis", n, c))),
    ("pi_over_2", "series:eq10+exp"): Method("terms", 40, _terms(lambda c, n: c.mp.exp(ln_pi_over_2_series(n, c)))),
    ("pi_over_2", "series:euler_wallis+exp"): Method(
        "terms", 40, _terms(lambda c, n: c.mp.exp(euler_transform_partial(wallis_log_series(), n, c)))
    ),
    ("pi_over_2", "integral:single+exp"): Method("tol", 1e-10, _quad(integral_ln_pi_over_2, transform=_exp)),
    ("e_gamma", "product:egamma"): Method("terms", 40, _terms(lambda c, n: product_partial("egamma", n, c))),
    ("e_gamma", "series:eq6+exp"): Method("terms", 40, _terms(lambda c, n: c.mp.exp(gamma_series_via_f(n, c)))),
    ("e", "product:guillera"): Method("terms", 40, _terms(lambda c, n: product_partial("guillera_e", n, c))),
    ("e", "product:pippenger"): Method("terms", 40, _terms(lambda c, n: 2 * product_partial("pippenger", n, c))),
    ("gamma", "integral:classical"): Method("tol", 1e-10, _quad(gamma_classical_integral)),
    ("gamma", "integral:double"): Method("tol", 1e-6, _quad(double_integral_gamma)),
    ("gamma", "integral:via_f"): Method("tol", 1e-10, _quad(gamma_via_f_integral)),
    ("gamma", "series:eq6"): Method("terms", 40, _terms(lambda c, n: gamma_series_via_f(n, c))),
    ("ln2", "series:dirichlet"): Method("terms", 10000, _terms(lambda c, n: _real(alt_zeta_dirichlet(1, n, c)))),
    ("ln2", "series:global"): Method("terms", 40, _terms(lambda c, n: _real(alt_zeta_global(1, n, c)))),
    ("ln2", "series:euler_harmonic"): Method(
        "terms", 40, _terms(lambda c, n: euler_transform_partial(harmonic_series(), n, c))
    ),
    ("ln2", "series:polylog"): Method("terms", 60, _terms(lambda c, n: _real(F_series(0.5, 1, n, c)))),
    ("ln_pi_over_2", "series:eq10"): Method("terms", 40, _terms(lambda c, n: ln_pi_over_2_series(n, c))),
    ("ln_pi_over_2", "series:euler_wallis"): Method(
        "terms", 40, _terms(lambda c, n: euler_transform_partial(wallis_log_series(), n, c))
    ),
    ("ln_pi_over_2", "series:zeta_derivative"): Method(
        "terms", 40, _terms(lambda c, n: 2 * _real(alt_zeta_deriv_global(0, n, c)))
    ),
    ("ln_pi_over_2", "series:f_prime0"): Method("terms", 40, _terms(lambda c, n: 2 * f_prime0_series(0.5, n, c))),
    ("ln_pi_over_2", "integral:single"): Method("tol", 1e-10, _quad(integral_ln_pi_over_2)),
    ("ln_pi_over_2", "integral:f_prime0"): Method(
        "tol", 1e-10, _quad(lambda tol, c: f_prime0_integral(0.5, tol, c), scale=2)
    ),
    ("ln_4_over_pi", "integral:double"): Method("tol", 1e-8, _quad(double_integral_ln4_over_pi)),
    ("ln_4_over_pi", "integral:ln2_minus_single"): Method(
        "tol", 1e-10, _quad(integral_ln_pi_over_2, scale=-1, transform=lambda c, v: reference_constant("ln2", c) + v)
    ),
    ("one", "integral:via_f"): Method("tol", 1e-10, _quad(unity_via_f_integral)),
    ("one", "series:log_cores_over_n"): Method("terms", 40, _terms(lambda c, n: unity_series_via_f(n, c))),
}

REFERENCES: dict[str, Callable[[PrecisionContext], object]] = {
    "pi_over_2": lambda c: reference_constant("pi", c) / 2,
    "e_gamma": lambda c: c.mp.exp(reference_constant("gamma", c)),
    "e": lambda c: reference_constant("e", c),
    "gamma": lambda c: reference_constant("gamma", c),
    "ln2": lambda c: reference_constant("ln2", c),
    "ln_pi_over_2": lambda c: c.mp.log(reference_constant("pi", c)) - reference_constant("ln2", c),
    "ln_4_over_pi": lambda c: 2 * reference_constant("ln2", c) - c.mp.log(reference_constant("pi", c)),
    "one": lambda c: c.mp.one,
}

CONSTANTS = tuple(REFERENCES)


def legal_methods(constant: str) -> list[str]:
    return [m for (c, m) in METHODS if c == constant]


# ---------------------------------------------------------------------------
# reports


class UsageError(EulerSeriesError):
    pass


def _report(fields: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(fields) + "\n"
    width = max(len(k) for k in fields)
    lines = [f"{k:<{width}}  {'absent' if v is None else v}" for k, v in fields.items()]
    return "\n".join(lines) + "\n"


def cmd_compute(args) -> dict:
    key = (args.constant, args.method)
    if args.constant not in REFERENCES:
        raise UsageError(f"unknown constant {args.constant!r}; choose from {', '.join(CONSTANTS)}")
    if key not in METHODS:
        raise UsageError(
            f"method {args.method!r} is not available for {args.constant}; "
            f"legal methods: {', '.join(legal_methods(args.constant))}"
        )
    method = METHODS[key]
    if method.param == "terms":
        if args.tol is not None:
            raise UsageError(f"{args.method} takes --terms, not --tol")
        arg = method.default if args.terms is None else args.terms
        if arg < 1:
            raise UsageError("--terms must be positive")
    else:
        if args.terms is not None:
            raise UsageError(f"{args.method} takes --tol, not --terms")
        arg = method.default if args.tol is None else args.tol
    ctx = make_context(args.precision)
    start = time.perf_counter()
    value, count = method.compute(ctx, arg)
    elapsed = (time.perf_counter() - start) * 1000.0
    ref = REFERENCES[args.constant](ctx)
    value = ctx.mp.mpf(value)
    fields = {
        "constant": args.constant,
        "method": args.method,
        "precision": args.precision,
        method.param: arg if method.param == "terms" else repr(float(arg)),
        "value": format_decimal(value, args.sig),
        "reference": format_decimal(ref, args.sig),
        "abs_error": format_decimal(abs(value - ref), args.sig),
        "terms_or_evals": count,
    }
    if not args.no_timing:
        fields["elapsed_ms"] = round(elapsed, 3)
    return fields


_COMPLEX_RE = re.compile(r"^[\s0-9eE.+\-ij]+$")


def parse_complex(text: str) -> complex:
    """Parse ``"a"``, ``"a+bi"``, ``"bi"`` or ``"a-i"`` (``j`` also accepted)."""
    t = text.strip().replace(" ", "")
    if not t or not _COMPLEX_RE.match(t):
        raise UsageError(f"cannot parse complex number {text!r}")
    t = t.replace("i", "j")
    try:
        return complex(t)
    except ValueError:
        raise UsageError(f"cannot parse complex number {text!r}") from None


def _format_complex(z, sig):
    z = mpmath.mpc(z)
    if z.imag == 0:
        return format_decimal(z.real, sig)
    im = format_decimal(abs(z.imag), sig)
    sign = "-" if z.imag < 0 else "+"
    return f"{format_decimal(z.real, sig)}{sign}{im}i"


def _zeta_reference(s: complex, method: str, ctx):
    if method == "derivative":
        if s == 0:
            return (ctx.mp.log(reference_constant("pi", ctx)) - reference_constant("ln2", ctx)) / 2
        return None
    if s == 0:
        return ctx.mp.mpf(0.5)
    if s == 1:
        return reference_constant("ln2", ctx)
    return None


ZETA_METHODS = {
    "dirichlet": lambda s, n, c: alt_zeta_dirichlet(s, n, c),
    "global": lambda s, n, c: alt_zeta_global(s, n, c),
    "derivative": lambda s, n, c: alt_zeta_deriv_global(s, n, c),
}


def cmd_zeta(args) -> dict:
    s = parse_complex(args.s)
    if args.method not in ZETA_METHODS:
        raise UsageError(f"unknown zeta method {args.method!r}")
    if args.terms < (1 if args.method == "dirichlet" else 0):
        raise UsageError("--terms out of range")
    ctx = make_context(args.precision)
    start = time.perf_counter()
    value = ctx.mp.mpc(ZETA_METHODS[args.method](s, args.terms, ctx))
    elapsed = (time.perf_counter() - start) * 1000.0
    ref = _zeta_reference(s, args.method, ctx)
    fields = {
        "s": args.s,
        "method": args.method,
        "precision": args.precision,
        "terms": args.terms,
        "value": _format_complex(value, args.sig),
        "reference": None if ref is None else format_decimal(ref, args.sig),
        "abs_error": None if ref is None else format_decimal(abs(value - ref), args.sig),
        "terms_or_evals": args.terms,
    }
    if not args.no_timing:
        fields["elapsed_ms"] = round(elapsed, 3)
    return fields


def figure1_rows(n_max: int, digits: int = FIGURE1_DIGITS, sig: int = DEFAULT_SIG) -> list[dict]:
    """Partial products of Wallis's product and of its Euler-transformed counterpart."""
    ctx = make_context(digits)
    ref = reference_constant("pi", ctx) / 2
    wallis = product_partials("wallis", n_max, ctx)
    sondow = product_partials("sondow_pi", n_max, ctx)
    rows = []
    for n, (w, s) in enumerate(zip(wallis, sondow), start=1):
        rows.append(
            {
                "n": n,
                "wallis": format_decimal(w, sig),
                "sondow": format_decimal(s, sig),
                "wallis_err": format_decimal(abs(w - ref), sig),
                "sondow_err": format_decimal(abs(s - ref), sig),
            }
        )
    return rows


def render_figure1(rows: list[dict], fmt: str) -> str:
    return _rows(rows, FIGURE1_HEADER, fmt)


def cmd_bench_figure1(args) -> None:
    if args.n_max < 1:
        raise UsageError("--n-max must be positive")
    text = render_figure1(figure1_rows(args.n_max, args.precision), args.format)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)


def _rows(rows: list[dict], header, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(rows, indent=1) + "\n"
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def cmd_trace(args) -> str:
    """Partial values for n = 1..n_max of a term-count method, with errors."""
    method = METHODS.get((args.constant, args.method))
    if method is None:
        raise UsageError(
            f"method {args.method!r} is not available for {args.constant}; "
            f"legal methods: {', '.join(legal_methods(args.constant))}"
        )
    if method.param != "terms":
        raise UsageError(f"{args.method} is a quadrature; traces need a term-count method")
    if args.n_max < 1:
        raise UsageError("--n-max must be positive")
    ctx = make_context(args.precision)
    ref = REFERENCES[args.constant](ctx)
    trace = convergence_trace(lambda n: ctx.mp.mpf(method.compute(ctx, n)[0]), ref, args.n_max, ctx)
    rows = [
        {"n": e.n, "value": format_decimal(e.partial, args.sig), "abs_error": format_decimal(e.abs_error, args.sig)}
        for e in trace
    ]
    return _rows(rows, TRACE_HEADER, args.format)


def cmd_bench_kernels(args) -> None:
    from .bench import compare_kernels, format_table

    sys.stdout.write(format_table(compare_kernels(args.levels, args.repeats)))


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="eulerseries", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute a constant by a chosen representation")
    c.add_argument("--constant", required=True, choices=CONSTANTS)
    c.add_argument("--method", required=True)
    c.add_argument("--precision", type=int, default=30)
    g = c.add_mutually_exclusive_group()
    g.add_argument("--terms", type=int)
    g.add_argument("--tol", type=float)
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--sig", type=int, default=DEFAULT_SIG, help="significant digits printed")
    c.add_argument("--no-timing", action="store_true", help="omit elapsed_ms (byte-stable output)")

    b = sub.add_parser("bench", help="benchmarks and convergence data")
    bsub = b.add_subparsers(dest="bench", required=True)
    f = bsub.add_parser("figure1", help="Wallis vs. binomial product for pi/2, as CSV or JSON")
    f.add_argument("--n-max", type=int, required=True)
    f.add_argument("--out", required=True)
    f.add_argument("--format", choices=("csv", "json"), default="csv")
    f.add_argument("--precision", type=int, default=FIGURE1_DIGITS)
    k = bsub.add_parser("kernels", help="time the numba and numpy quadrature kernels")
    k.add_argument("--levels", type=int, nargs="+", default=[5, 6, 7])
    k.add_argument("--repeats", type=int, default=3)

    z = sub.add_parser("zeta", help="evaluate the alternating zeta function")
    z.add_argument("--s", required=True)
    z.add_argument("--method", required=True, choices=tuple(ZETA_METHODS))
    z.add_argument("--terms", type=int, required=True)
    z.add_argument("--precision", type=int, default=30)
    z.add_argument("--format", choices=("text", "json"), default="text")
    z.add_argument("--sig", type=int, default=DEFAULT_SIG)
    z.add_argument("--no-timing", action="store_true")

    t = sub.add_parser("trace", help="partial values and errors for n = 1..N")
    t.add_argument("--constant", required=True, choices=CONSTANTS)
    t.add_argument("--method", required=True)
    t.add_argument("--n-max", type=int, required=True)
    t.add_argument("--precision", type=int, default=30)
    t.add_argument("--format", choices=("csv", "json"), default="csv")
    t.add_argument("--sig", type=int, default=DEFAULT_SIG)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compute":
            sys.stdout.write(_report(cmd_compute(args), args.format))
        elif args.command == "zeta":
            sys.stdout.write(_report(cmd_zeta(args), args.format))
        elif args.command == "trace":
            sys.stdout.write(cmd_trace(args))
        elif args.bench == "figure1":
            cmd_bench_figure1(args)
        else:
            cmd_bench_kernels(args)
    except (UsageError, DomainError, InvalidPrecision, ValueError) as exc:
        print(f"eulerseries: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (PrecisionExhausted, OverflowError) as exc:
        print(f"eulerseries: precision exhausted: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except OSError as exc:
        print(f"eulerseries: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
