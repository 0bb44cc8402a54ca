import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from sparsedft.errors import DomainError, InvalidPartitionError, InvalidSequenceError
from sparsedft.nodes import QSequenceSpec, q_sequence
from sparsedft.oracle import brute_force_dft, lorentzian_exact, resonant_exact
from sparsedft.transform import (NodeSequence, SampledFunction, Segment, assemble_weights,
                                 cosine_transform, dft, piecewise_transform, series_sum,
                                 sine_transform)


def vec(fn, domain=None):
    return SampledFunction(fn, domain, vectorized=True)


@st.composite
def node_sequences(draw, max_width=10**5):
    n_a = draw(st.integers(-1000, 1000))
    width = draw(st.integers(2, max_width))
    count = draw(st.integers(1, min(width - 1, 150)))
    inner = draw(st.sets(st.integers(n_a + 1, n_a + width - 1), min_size=count, max_size=count))
    nodes = sorted(inner)
    if len(nodes) % 2 == 0:
        nodes.pop()
    return NodeSequence([n_a] + nodes + [n_a + width])


ks = st.floats(-math.pi, math.pi)


# --- NodeSequence -----------------------------------------------------------

@pytest.mark.parametrize("bad", [[0, 1], [0, 1, 2, 3], [0, 2, 1], [0, 0, 1], [5]])
def test_node_sequence_validation(bad):
    with pytest.raises(InvalidSequenceError):
        NodeSequence(bad)


def test_node_sequence_overflow():
    with pytest.raises(InvalidSequenceError):
        NodeSequence([0, 1, 2**70])


def test_node_sequence_is_read_only():
    s = NodeSequence([0, 1, 2])
    with pytest.raises(ValueError):
        s.nodes[0] = 5


def test_node_text_round_trip(tmp_path):
    s = q_sequence(QSequenceSpec(1.15, 151))
    path = tmp_path / "nodes.txt"
    s.save(path)
    assert path.read_text().splitlines()[:3] == ["1", "2", "3"]
    assert NodeSequence.load(path) == s


# --- assembly ----------------------------------------------------------------

def test_assemble_three_nodes_at_zero():
    W = assemble_weights(0.0, [0, 1, 2]).weights
    np.testing.assert_array_equal(W, [1, 1, 1])


def test_assemble_constant_sum_even_spacing():
    assert assemble_weights(0.0, [0, 2, 4, 6, 8]).weights.sum() == pytest.approx(9, rel=1e-14)


@pytest.mark.parametrize("k", [0.3, 2.9])
def test_assemble_quadratic_on_uneven_nodes(k):
    q = lambda n: 2.0 - 3.0 * n + n * n
    nodes = [0, 1, 2, 4, 8]
    n = np.arange(9)
    want = np.sum(q(n) * np.exp(-1j * k * n))
    got = assemble_weights(k, nodes).apply(q(np.array(nodes, dtype=float)))
    assert abs(got - want) <= 1e-10 * abs(want)


def test_weight_table_reuse():
    nodes = q_sequence(QSequenceSpec(1.3, 41))
    table = assemble_weights(0.4, nodes)
    for p in (1.5, 2.0, 3.0):
        f = vec(lambda n, p=p: n.astype(float) ** -p)
        assert table.apply(f.values(nodes.nodes)) == pytest.approx(dft(f, nodes, 0.4).value, rel=1e-14)


def test_weights_all_finite():
    nodes = q_sequence(QSequenceSpec(1.15, 151))
    for k in (0.0, 1e-12, 1e-7, 0.01, 1.0, math.pi, -math.pi):
        assert np.all(np.isfinite(assemble_weights(k, nodes).weights))


@given(node_sequences(max_width=10**9))
def test_constant_sum_identity(nodes):
    W = assemble_weights(0.0, nodes).weights
    assert np.all(W.imag == 0.0)
    total = nodes.stop - nodes.start + 1
    bound = 1e-11 * total + 4 * np.finfo(float).eps * np.abs(W).sum()
    assert abs(W.sum().real - total) <= bound


@given(node_sequences(), ks)
def test_constant_identity_general_k(nodes, k):
    got = assemble_weights(k, nodes).apply(np.ones(len(nodes)))
    want = brute_force_dft(lambda n: np.ones(n.shape), nodes.start, nodes.stop, k)
    assert abs(got - want) <= 1e-10 * abs(want) + 1e-12


@given(node_sequences(), ks, st.tuples(*[st.floats(-1, 1)] * 3))
def test_global_quadratic_exactness(nodes, k, coef):
    al, be, ga = coef

    def quad(n):
        n = n.astype(float)
        return al + be * n + ga * n * n

    got = dft(vec(quad), nodes, k).value
    want = brute_force_dft(quad, nodes.start, nodes.stop, k)
    # floor for sums that cancel to zero exactly (e.g. alternating signs at k = pi)
    scale = brute_force_dft(lambda n: np.abs(quad(n)), nodes.start, nodes.stop, 0.0).real
    assert abs(got - want) <= 1e-9 * abs(want) + 1e-14 * scale


@given(node_sequences(), ks)
def test_conjugate_symmetry(nodes, k):
    a = assemble_weights(k, nodes).weights
    b = assemble_weights(-k, nodes).weights
    assert np.all(np.abs(b - np.conj(a)) <= 1e-12 * np.maximum(1.0, np.abs(a)))


# --- entry points -------------------------------------------------------------

def test_dft_of_constant():
    nodes = [0, 3, 10, 40, 100]
    assert dft(vec(lambda n: np.ones(n.shape), (0, 100)), nodes, 0.0).value == pytest.approx(101)


def test_dft_of_square_on_even_grid():
    nodes = list(range(0, 51, 5))
    n = np.arange(51)
    want = np.sum(n**2 * np.exp(-1j * n))
    got = dft(vec(lambda m: m * m * 1.0, (0, 50)), nodes, 1.0).value
    assert abs(got - want) <= 1e-10 * abs(want)


def test_dft_domain_error():
    with pytest.raises(DomainError):
        dft(vec(lambda n: n * 1.0, (1, 10)), [0, 5, 10], 0.2)


def test_dft_counts_evaluations():
    nodes = q_sequence(QSequenceSpec(1.2, 31))
    calls = []

    def f(n):
        calls.append(n)
        return 1.0 / n

    sf = SampledFunction(f)
    res = dft(sf, nodes, 0.7)
    assert len(calls) == len(nodes) == sf.evaluations == res.node_count


def test_series_sum_examples():
    assert series_sum(vec(lambda n: n * 1.0), [0, 5, 10]).value == pytest.approx(55)
    assert series_sum(vec(lambda n: np.zeros(n.shape)), [0, 5, 10]).value == 0
    r = series_sum(vec(lambda n: 1.0 / n.astype(float) ** 2), q_sequence(QSequenceSpec(1.15, 151)))
    assert round(r.value, 4) == 1.6449
    assert r.cutoff == 1272553509
    assert r.efficiency == pytest.approx(1272553509 / 151)


def test_dft_zeta_p15():
    r = dft(vec(lambda n: n.astype(float) ** -1.5), q_sequence(QSequenceSpec(1.15, 151)), 0.0)
    assert round(r.value.real, 4) == 2.6122


def test_sine_transform_three_points():
    assert sine_transform(vec(lambda n: n * 1.0), [0, 1, 2], math.pi / 2) == pytest.approx(1.0, abs=1e-14)


def test_sine_transform_zero_k():
    f = vec(lambda n: 1.0 / (1.0 + n))
    assert sine_transform(f, [0, 4, 9, 20, 50], 0.0) == 0.0


def test_cosine_transform_zero_k_is_series_sum():
    f = vec(lambda n: 1.0 / (1.0 + n))
    nodes = [0, 4, 9, 20, 50]
    assert cosine_transform(f, nodes, 0.0) == pytest.approx(series_sum(f, nodes).value, rel=1e-15)


def test_cosine_lorentzian_at_x_one():
    a = 1.0
    from sparsedft.nodes import HybridSpec, hybrid_nodes
    spec = HybridSpec.for_lorentzian(a)
    f = vec(lambda n: 1.0 / ((n * math.pi / a) ** 2 + 1.0))
    F = 1 / a + 2 / a * cosine_transform(f, hybrid_nodes(spec), math.pi)
    assert abs(F - 1 / math.sinh(1.0)) <= 1e-3
    assert abs(F - lorentzian_exact(a, 1.0)) <= 1e-3


@given(node_sequences(max_width=10**4), ks, st.randoms(use_true_random=False))
def test_sine_cosine_are_dft_parts(nodes, k, rnd):
    vals = np.array([rnd.uniform(-1, 1) for _ in range(len(nodes))])
    f = SampledFunction.from_table(nodes.nodes, vals)
    d = dft(f, nodes, k).value
    assert abs(cosine_transform(f, nodes, k) - d.real) <= 1e-12 * max(1.0, abs(d))
    assert abs(-sine_transform(f, nodes, k) - d.imag) <= 1e-12 * max(1.0, abs(d))


def test_complex_f_linearity():
    rng = np.random.default_rng(3)
    nodes = NodeSequence([0, 2, 3, 7, 11, 20, 21])
    vals = rng.normal(size=7) + 1j * rng.normal(size=7)
    fc = SampledFunction.from_table(nodes.nodes, vals)
    fr = SampledFunction.from_table(nodes.nodes, vals.real)
    fi = SampledFunction.from_table(nodes.nodes, vals.imag)
    for tr in (sine_transform, cosine_transform):
        got = tr(fc, nodes, 0.9)
        assert isinstance(got, complex)
        assert got == pytest.approx(tr(fr, nodes, 0.9) + 1j * tr(fi, nodes, 0.9), abs=1e-13)


# --- piecewise ----------------------------------------------------------------

def test_piecewise_single_segment_equals_dft():
    nodes = NodeSequence([1, 3, 8, 20, 50])
    f = vec(lambda n: 1.0 / n)
    one = piecewise_transform([Segment(1, 50, nodes)], f, 0.8)
    assert one.value == dft(f, nodes, 0.8).value


def test_piecewise_split_quadratic():
    q = lambda n: 1.0 + 2.0 * n - 0.5 * n * n
    segs = [Segment(0, 5, NodeSequence([0, 2, 5])), Segment(6, 10, NodeSequence([6, 9, 10]))]
    k = 0.45
    n = np.arange(11)
    want = np.sum(q(n) * np.exp(-1j * k * n))
    got = piecewise_transform(segs, vec(q), k).value
    assert abs(got - want) <= 1e-10 * abs(want)


def test_piecewise_direct_and_degenerate_segments():
    f = vec(lambda n: np.cos(n * 1.0))
    segs = [Segment(1, 1), Segment(2, 3), Segment(4, 40, NodeSequence([4, 10, 40]))]
    res = piecewise_transform(segs, f, 0.3, kind="cos")
    n = np.arange(1, 4)
    head = np.sum(np.cos(n) * np.cos(0.3 * n))
    tail = cosine_transform(vec(lambda m: np.cos(m * 1.0)), [4, 10, 40], 0.3)
    assert res.value == pytest.approx(head + tail, rel=1e-14)
    assert res.node_count == 3 + 3
    assert res.cutoff == 40


def test_piecewise_overlap_rejected():
    segs = [Segment(0, 5, NodeSequence([0, 2, 5])), Segment(5, 9, NodeSequence([5, 7, 9]))]
    with pytest.raises(InvalidPartitionError):
        piecewise_transform(segs, vec(lambda n: n * 1.0), 0.1)


def test_segment_nodes_must_match_range():
    with pytest.raises(InvalidPartitionError):
        Segment(0, 6, NodeSequence([0, 2, 5]))


def test_piecewise_resonant_example():
    from sparsedft.nodes import SplitSpec, split_nodes
    a = 1.5 * math.pi
    segs = split_nodes(SplitSpec.for_resonant(a))
    f = vec(lambda n: 1.0 / ((n * math.pi / a) ** 2 - 1.0))
    F = 1 / a - 2 / a * piecewise_transform(segs, f, 0.5 * math.pi, kind="cos").value
    want = math.sin(a / 2) - math.cos(a / 2) / math.tan(a)
    assert abs(F - want) <= 1e-3
    assert want == pytest.approx(float(resonant_exact(a, 0.5)))
