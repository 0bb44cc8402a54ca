"""Drivers for the three worked problems: zeta sums and two cosine series.

Each driver returns a list of row dicts ready for tabular output.
"""
import math

import numpy as np

from .errors import DivergentSeriesError, InvalidCutoffError
from .nodes import (DEFAULT_M, HybridSpec, QSequenceSpec, SplitSpec, hybrid_nodes,
                    q_sequence, split_nodes)
from .oracle import brute_force_dft, check_resonant, lorentzian_exact, resonant_exact, zeta_reference
from .transform import SampledFunction, assemble_weights, piecewise_transform, series_sum

TABLE_P = (1.4, 1.5, 1.6, 1.7, 1.8, 2.0)


def default_grid():
    """``x = 0.01 i`` for ``i = 1 .. 199``; the endpoints 0 and 2 are excluded."""
    return 0.01 * np.arange(1, 200)


def make_grid(x_min=None, x_max=None, count=None):
    if x_min is None and x_max is None and count is None:
        return default_grid()
    x_min = 0.01 if x_min is None else x_min
    x_max = 1.99 if x_max is None else x_max
    count = 199 if count is None else count
    if not x_min < x_max or count < 1:
        raise InvalidCutoffError(f"bad grid: min={x_min}, max={x_max}, count={count}")
    return np.linspace(x_min, x_max, count)


def run_zeta(p_list=TABLE_P, q=1.15, M=DEFAULT_M):
    nodes = q_sequence(QSequenceSpec(q, M))
    rows = []
    for p in p_list:
        if p <= 1:
            raise DivergentSeriesError(f"sum of 1/n^p diverges for p={p}")
        f = SampledFunction(lambda n, p=p: n.astype(float) ** -p, vectorized=True)
        res = series_sum(f, nodes)
        ref = zeta_reference(p)
        rows.append({
            "p": p,
            "S": float(res.value),
            "zeta": ref,
            "delta": None if ref is None else float(res.value) - ref,
            "M": res.node_count,
            "cutoff": res.cutoff,
            "efficiency": res.efficiency,
        })
    return rows


def lorentzian(a):
    return lambda n: 1.0 / ((n.astype(float) * math.pi / a) ** 2 + 1.0)


def resonant(a):
    return lambda n: 1.0 / ((n.astype(float) * math.pi / a) ** 2 - 1.0)


def run_example2(a, xs=None, M=DEFAULT_M, brute_force=False):
    """``1/a + (2/a) sum_{n>=1} cos(n pi x) / ((n pi/a)^2 + 1)`` on a grid of ``x``.

    Samples are taken once; only the weight table changes with ``x``.
    """
    if a <= 0:
        raise InvalidCutoffError(f"parameter a must be positive, got {a}")
    xs = default_grid() if xs is None else np.asarray(xs, dtype=float)
    spec = HybridSpec.for_lorentzian(a, M)
    nodes = hybrid_nodes(spec)
    fn = lorentzian(a)
    values = SampledFunction(fn, vectorized=True).values(nodes.nodes)
    rows = []
    for x in xs:
        table = assemble_weights(math.pi * x, nodes)
        approx = 1.0 / a + 2.0 / a * float(table.cosine(values))
        exact = float(lorentzian_exact(a, x))
        row = {"x": float(x), "approx": approx, "exact": exact, "error": approx - exact}
        if brute_force:
            bf = 1.0 / a + 2.0 / a * brute_force_dft(fn, 1, spec.N, math.pi * x).real
            row["brute_force"] = bf
        rows.append(row)
    return rows


def run_example3(a, xs=None, M=DEFAULT_M, brute_force=False):
    """``1/a - (2/a) sum_{n>=1} cos(n pi x) / ((n pi/a)^2 - 1)`` on a grid of ``x``."""
    if a <= 0:
        raise InvalidCutoffError(f"parameter a must be positive, got {a}")
    check_resonant(a)
    xs = default_grid() if xs is None else np.asarray(xs, dtype=float)
    spec = SplitSpec.for_resonant(a, M)
    segments = split_nodes(spec)
    fn = resonant(a)
    rows = []
    for x in xs:
        f = SampledFunction(fn, vectorized=True)
        res = piecewise_transform(segments, f, math.pi * x, kind="cos")
        approx = 1.0 / a - 2.0 / a * float(res.value)
        exact = float(resonant_exact(a, x))
        row = {"x": float(x), "approx": approx, "exact": exact, "error": approx - exact}
        if brute_force:
            bf = 1.0 / a - 2.0 / a * brute_force_dft(fn, 1, spec.N, math.pi * x).real
            row["brute_force"] = bf
        rows.append(row)
    return rows
