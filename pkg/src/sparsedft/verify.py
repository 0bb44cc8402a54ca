"""Randomised invariant checks against brute-force summation.

``run_verify`` draws panels, node sequences and wavenumbers from a seeded
generator and records the worst error seen for each property.
"""
from dataclasses import dataclass

import numpy as np

from . import kernel
from .nodes import HybridSpec, QSequenceSpec, SplitSpec, hybrid_nodes, q_sequence, split_nodes
from .oracle import brute_force_dft, faulhaber
from .transform import NodeSequence, SampledFunction, assemble_weights, dft, cosine_transform, sine_transform


@dataclass
class PropertyCheck:
    name: str
    max_error: float
    tolerance: float
    trials: int

    @property
    def passed(self):
        return bool(self.max_error <= self.tolerance)

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return (f"{status}  {self.name:<38s} max_err={self.max_error:.3e}  "
                f"tol={self.tolerance:.0e}  trials={self.trials}")


def random_k(rng):
    # mix of generic, tiny and near-pi wavenumbers
    r = rng.random()
    if r < 0.15:
        return float(rng.choice([-1, 1]) * 10.0 ** rng.uniform(-9, -3))
    if r < 0.25:
        return float(rng.choice([-1, 1]) * (np.pi - 10.0 ** rng.uniform(-6, -1)))
    return float(rng.uniform(-np.pi, np.pi))


def random_panel(rng, max_span=10**5):
    span = int(np.exp(rng.uniform(np.log(2), np.log(max_span))))
    span = max(span, 2)
    n1 = int(rng.integers(-1000, 1000))
    n2 = n1 + int(rng.integers(1, span))
    return n1, n2, n1 + span


def random_nodes(rng, max_width=10**5, max_count=301):
    width = max(2, int(np.exp(rng.uniform(np.log(2), np.log(max_width)))))
    n_a = int(rng.integers(-1000, 1000))
    count = int(rng.integers(3, min(width + 1, max_count) + 1))
    if count % 2 == 0:
        count -= 1
    inner = n_a + 1 + rng.choice(width - 1, size=count - 2, replace=False)
    return NodeSequence(np.concatenate(([n_a], np.sort(inner), [n_a + width])))


def _rel(a, b):
    return abs(a - b) / abs(b)


def check_panel_constant(rng, trials=100):
    worst = 0.0
    for _ in range(trials):
        p = random_panel(rng)
        k = random_k(rng)
        ref = brute_force_dft(lambda m: np.ones(m.shape), p[0], p[2] - 1, k)
        got = kernel.panel_sum(k, p, 1.0, 1.0, 1.0)
        worst = max(worst, abs(got - ref) / (1e-11 * abs(ref) + 1e-13))
    return PropertyCheck("panel constant exactness (err/tol)", worst, 1.0, trials)


def check_panel_polynomial(rng, trials=100):
    worst = 0.0
    for _ in range(trials):
        p = random_panel(rng)
        k = random_k(rng)
        for q in (lambda m: m.astype(float), lambda m: m.astype(float) ** 2):
            ref = brute_force_dft(q, p[0], p[2] - 1, k)
            got = kernel.panel_sum(k, p, *q(np.array(p)))
            worst = max(worst, _rel(got, ref))
    return PropertyCheck("panel linear/quadratic exactness", worst, 1e-10, trials)


def check_path_continuity(rng, trials=100):
    worst = 0.0
    for _ in range(trials):
        p = random_panel(rng, max_span=10**4)
        w0 = kernel.panel_weights(0.0, p)
        for k in (1e-6, -1e-6):
            for a, b in zip(kernel.panel_weights(k, p), w0):
                err = abs(a - b) / (1e-5 * abs(b)) if abs(b) > 1 else abs(a - b) / 1e-6
                worst = max(worst, err)
    return PropertyCheck("small-k path continuity (err/tol)", worst, 1.0, trials)


def check_path_agreement(rng, trials=100):
    """Taylor and closed-form moments agree where the kernel switches between them."""
    worst = 0.0
    for _ in range(trials):
        L = int(np.exp(rng.uniform(np.log(2), np.log(10**6))))
        k = kernel.SMALL_K_THRESHOLD / L * float(rng.choice([-1, 1]))
        taylor = kernel._taylor_moments(k, np.array([L]))
        closed = kernel._closed_moments(k, np.array([float(L)]))
        for a, b in zip(taylor, closed):
            worst = max(worst, float(abs(a[0] - b[0]) / abs(a[0])))
    return PropertyCheck("Taylor/closed-form agreement at switch", worst, 1e-12, trials)


def check_weight_sum_zero(rng, trials=200):
    worst = 0.0
    for _ in range(trials):
        p = random_panel(rng, max_span=10**9)
        w = kernel.panel_weights(0.0, p)
        worst = max(worst, _rel(w.w1 + w.w2 + w.w3, p[2] - p[0]))
    return PropertyCheck("panel k=0 weight sum", worst, 1e-12, trials)


def check_conjugate_symmetry(rng, trials=200):
    worst = 0.0
    for _ in range(trials):
        nodes = random_nodes(rng)
        k = random_k(rng)
        wp = assemble_weights(k, nodes).weights
        wm = assemble_weights(-k, nodes).weights
        worst = max(worst, float(np.max(np.abs(wm - np.conj(wp)) / np.maximum(1.0, np.abs(wp)))))
    return PropertyCheck("conjugate symmetry W(-k)=conj W(k)", worst, 1e-12, trials)


def check_global_quadratic(rng, trials=200):
    worst = 0.0
    for _ in range(trials):
        nodes = random_nodes(rng)
        k = random_k(rng)
        al, be, ga = rng.uniform(-1, 1, 3)

        def quad(m):
            m = m.astype(float)
            return al + be * m + ga * m * m

        ref = brute_force_dft(quad, nodes.start, nodes.stop, k)
        got = dft(SampledFunction(quad, vectorized=True), nodes, k).value
        worst = max(worst, _rel(got, ref))
    return PropertyCheck("global quadratic exactness", worst, 1e-9, trials)


def check_constant_sum(rng, trials=200):
    worst = 0.0
    for _ in range(trials):
        nodes = random_nodes(rng, max_width=10**9)
        W = assemble_weights(0.0, nodes).weights
        worst = max(worst, _rel(W.sum().real, nodes.stop - nodes.start + 1))
        worst = max(worst, float(np.max(np.abs(W.imag))))
    return PropertyCheck("constant-sum identity at k=0", worst, 1e-11, trials)


def check_constant_general_k(rng, trials=100):
    worst = 0.0
    for _ in range(trials):
        nodes = random_nodes(rng)
        k = random_k(rng)
        table = assemble_weights(k, nodes)
        got = table.apply(np.ones(len(nodes)))
        ref = brute_force_dft(lambda m: np.ones(m.shape), nodes.start, nodes.stop, k)
        worst = max(worst, _rel(got, ref))
    return PropertyCheck("constant identity at general k", worst, 1e-10, trials)


def check_sine_cosine(rng, trials=100):
    worst = 0.0
    for _ in range(trials):
        nodes = random_nodes(rng, max_width=10**4)
        k = random_k(rng)
        vals = rng.normal(size=len(nodes))
        f = SampledFunction.from_table(nodes.nodes, vals)
        d = dft(f, nodes, k).value
        c = cosine_transform(f, nodes, k)
        s = sine_transform(f, nodes, k)
        scale = max(1.0, abs(d))
        worst = max(worst, abs(c - d.real) / scale, abs(-s - d.imag) / scale)
        # complex f: linearity
        cvals = vals + 1j * rng.normal(size=len(nodes))
        fc = SampledFunction.from_table(nodes.nodes, cvals)
        fr = SampledFunction.from_table(nodes.nodes, cvals.real)
        fi = SampledFunction.from_table(nodes.nodes, cvals.imag)
        for tr in (cosine_transform, sine_transform):
            lin = tr(fr, nodes, k) + 1j * tr(fi, nodes, k)
            worst = max(worst, abs(tr(fc, nodes, k) - lin) / max(1.0, abs(lin)))
    return PropertyCheck("sine/cosine vs dft parts", worst, 1e-12, trials)


def check_evaluation_count(rng, trials=50):
    worst = 0
    for _ in range(trials):
        nodes = random_nodes(rng, max_width=10**4)
        calls = []

        def f(n):
            calls.append(n)
            return 1.0 / (1 + n * n)

        sf = SampledFunction(f)
        dft(sf, nodes, random_k(rng))
        worst = max(worst, abs(len(calls) - len(nodes)), abs(sf.evaluations - len(nodes)))
    return PropertyCheck("evaluation count equals M", float(worst), 0.0, trials)


def check_node_plans(rng, trials=1000):
    bad = 0
    for i in range(trials):
        kind = i % 3
        if kind == 0:
            M = 2 * int(rng.integers(1, 120)) + 1
            qmax = min(3.0, float(np.exp(60 * np.log(2) / (M - 1))))
            seqs = [q_sequence(QSequenceSpec(float(rng.uniform(1.01, qmax)), M))]
            ends = None
        elif kind == 1:
            a = float(10.0 ** rng.uniform(-0.5, 5))
            spec = HybridSpec.for_lorentzian(a)
            seqs = [hybrid_nodes(spec)]
            ends = (1, spec.N)
        else:
            a = float(10.0 ** rng.uniform(0, 6))
            spec = SplitSpec.for_resonant(a)
            segs = split_nodes(spec)
            seqs = [s.nodes for s in segs if s.nodes is not None]
            ends = (1, spec.N)
            if any(b.start != a_.stop + 1 for a_, b in zip(segs, segs[1:])):
                bad += 1
            if segs[0].start != 1 or segs[-1].stop != spec.N:
                bad += 1
        for s in seqs:
            n = s.nodes
            if len(n) % 2 == 0 or np.any(np.diff(n) <= 0):
                bad += 1
        if ends and kind == 1 and (seqs[0].start, seqs[0].stop) != ends:
            bad += 1
    return PropertyCheck("node plans ascending/odd/endpoints", float(bad), 0.0, trials)


def check_faulhaber(rng, trials=200):
    worst = 0.0
    for _ in range(trials):
        m = int(rng.integers(0, 9))
        L = int(rng.integers(1, 10**4 + 1))
        direct = sum(n**m for n in range(L))
        if direct < 2**53:
            worst = max(worst, abs(faulhaber(m, L) - direct))
    return PropertyCheck("faulhaber power sums exact", worst, 0.0, trials)


CHECKS = (
    check_panel_constant,
    check_panel_polynomial,
    check_path_continuity,
    check_path_agreement,
    check_weight_sum_zero,
    check_conjugate_symmetry,
    check_global_quadratic,
    check_constant_sum,
    check_constant_general_k,
    check_sine_cosine,
    check_evaluation_count,
    check_node_plans,
    check_faulhaber,
)


def run_verify(seed=0, checks=CHECKS):
    """Run every property check; returns the list of :class:`PropertyCheck`."""
    rng = np.random.default_rng(seed)
    return [check(rng) for check in checks]
