"""Timing of the numba kernels against their numpy fallbacks."""

from __future__ import annotations

import time

from . import _kernels


def _args(name, level):
    x, c, lx, w = _kernels.tanh_sinh_nodes(level)
    if name == "i2d":
        return (x, c, lx, w, 200.0 * x, 200.0 * w)
    return (x, c, lx, w)


def _best_of(fn, args, repeats):
    best = float("inf")
    value = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        value = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, value


def compare_kernels(levels=(5, 6, 7), repeats=3) -> list[dict]:
    """Best-of-``repeats`` wall time of each 2-D kernel on both backends.

    Compilation is excluded: every numba kernel is called once on the
    smallest grid before timing starts.
    """
    rows = []
    for name in _kernels.NUMPY_KERNELS:
        fast = _kernels.NUMBA_KERNELS.get(name)
        if fast is not None:
            fast(*_args(name, 1))
        for level in levels:
            args = _args(name, level)
            t_np, v_np = _best_of(_kernels.NUMPY_KERNELS[name], args, repeats)
            row = {"kernel": name, "level": level, "points": args[0].shape[0] ** 2, "numpy_ms": t_np * 1e3}
            if fast is not None:
                t_nb, v_nb = _best_of(fast, args, repeats)
                row.update(numba_ms=t_nb * 1e3, speedup=t_np / t_nb, abs_diff=abs(v_nb - v_np))
            rows.append(row)
    return rows


def format_table(rows: list[dict]) -> str:
    head = f"{'kernel':<14}{'level':>6}{'points':>10}{'numpy ms':>11}{'numba ms':>11}{'speedup':>9}{'|diff|':>10}\n"
    out = [head]
    for r in rows:
        nb = r.get("numba_ms")
        out.append(
            f"{r['kernel']:<14}{r['level']:>6}{r['points']:>10}{r['numpy_ms']:>11.3f}"
            + (f"{nb:>11.3f}{r['speedup']:>9.1f}{r['abs_diff']:>10.1e}\n" if nb is not None else f"{'-':>11}{'-':>9}{'-':>10}\n")
        )
    return "".join(out)
