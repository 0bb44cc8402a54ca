"""Assembly of global node weights and the transform entry points.

Given an odd number of ascending nodes ``n_1 < ... < n_{2m+1}`` the range
``[n_1, n_{2m+1}]`` is cut into ``m`` half-open panels
``[n_{2l-1}, n_{2l+1})`` plus the last point, and

    sum_{n=n_1}^{n_{2m+1}} f(n) e^{-ikn}  ~  sum_j W_j(k) f(n_j) e^{-ikn_j}.

Weights do not depend on ``f``, so a :class:`WeightTable` built once can be
applied to any number of functions sampled on the same nodes.
"""
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

import numpy as np

from . import kernel
from .errors import DomainError, InvalidPartitionError, InvalidSequenceError


class NodeSequence:
    """Immutable, strictly ascending, odd-length sequence of int64 nodes."""

    __slots__ = ("_nodes",)

    def __init__(self, nodes):
        try:
            arr = np.array(nodes, dtype=np.int64).ravel()
        except OverflowError:
            raise InvalidSequenceError("node values must fit in signed 64-bit") from None
        if arr.size < 3 or arr.size % 2 == 0:
            raise InvalidSequenceError(
                f"node sequence needs an odd length >= 3, got {arr.size}")
        if np.any(np.diff(arr) <= 0):
            raise InvalidSequenceError("node sequence must be strictly ascending")
        arr.flags.writeable = False
        self._nodes = arr

    @property
    def nodes(self):
        return self._nodes

    @property
    def start(self):
        return int(self._nodes[0])

    @property
    def stop(self):
        return int(self._nodes[-1])

    @property
    def panels(self):
        """Number of three-node panels ``m``."""
        return (self._nodes.size - 1) // 2

    def __len__(self):
        return int(self._nodes.size)

    def __iter__(self):
        return (int(v) for v in self._nodes)

    def __getitem__(self, i):
        return self._nodes[i]

    def __eq__(self, other):
        if not isinstance(other, NodeSequence):
            return NotImplemented
        return np.array_equal(self._nodes, other._nodes)

    def __hash__(self):
        return hash(self._nodes.tobytes())

    def __repr__(self):
        return f"NodeSequence(len={len(self)}, start={self.start}, stop={self.stop})"

    def to_text(self):
        return "".join(f"{int(v)}\n" for v in self._nodes)

    @classmethod
    def from_text(cls, text):
        values = [int(tok) for tok in text.split()]
        return cls(values)

    def save(self, path):
        Path(path).write_text(self.to_text())

    @classmethod
    def load(cls, path):
        return cls.from_text(Path(path).read_text())


class SampledFunction:
    """Supplier of ``f(n)`` at integer ``n`` that counts its evaluations.

    ``evaluator`` maps an integer to a (complex) number. If ``vectorized`` is
    true it is called once with an int64 array instead; ``evaluations`` is
    still incremented by the number of points requested.
    """

    def __init__(self, evaluator: Callable, domain: Optional[tuple] = None,
                 vectorized: bool = False):
        self.evaluator = evaluator
        self.domain = None if domain is None else (int(domain[0]), int(domain[1]))
        self.vectorized = vectorized
        self.evaluations = 0

    @classmethod
    def from_table(cls, ns, values):
        """Back the function by explicit samples ``values[i] = f(ns[i])``."""
        table = {int(n): v for n, v in zip(ns, values)}
        if not table:
            raise DomainError("empty sample table")
        lo, hi = min(table), max(table)

        def lookup(n):
            try:
                return table[int(n)]
            except KeyError:
                raise DomainError(f"no sample for n={int(n)}") from None

        return cls(lookup, (lo, hi))

    def check_domain(self, lo, hi):
        if self.domain is not None and (lo < self.domain[0] or hi > self.domain[1]):
            raise DomainError(
                f"nodes span [{lo}, {hi}] outside function domain {self.domain}")

    def values(self, ns):
        ns = np.asarray(ns, dtype=np.int64)
        if ns.size:
            self.check_domain(int(ns.min()), int(ns.max()))
        self.evaluations += int(ns.size)
        if self.vectorized:
            return np.asarray(self.evaluator(ns))
        return np.array([self.evaluator(int(n)) for n in ns])

    def __call__(self, n):
        return self.values(np.array([n]))[0]


@dataclass(frozen=True)
class WeightTable:
    k: float
    nodes: NodeSequence
    weights: np.ndarray = field(repr=False)

    @property
    def phases(self):
        return kernel.expi(self.k, self.nodes.nodes)

    def apply(self, values):
        """``sum_j W_j v_j e^{-ik n_j}`` for samples ``v_j = f(n_j)``."""
        values = np.asarray(values)
        if values.shape[0] != len(self.nodes):
            raise ValueError(f"expected {len(self.nodes)} samples, got {values.shape[0]}")
        if self.k == 0.0:
            return self.weights.real @ values
        return (self.weights * self.phases) @ values

    def sine(self, values):
        sin, cos = kernel.sincos_product(self.k, self.nodes.nodes)
        coef = self.weights.real * sin - self.weights.imag * cos
        return coef @ np.asarray(values)

    def cosine(self, values):
        sin, cos = kernel.sincos_product(self.k, self.nodes.nodes)
        coef = self.weights.real * cos + self.weights.imag * sin
        return coef @ np.asarray(values)


@dataclass(frozen=True)
class TransformResult:
    value: complex
    node_count: int
    cutoff: int

    @property
    def efficiency(self):
        return self.cutoff / self.node_count


@dataclass(frozen=True)
class Segment:
    """Sub-range ``[start, stop]`` of a piecewise problem.

    ``nodes=None`` means the segment is summed term by term.
    """

    start: int
    stop: int
    nodes: Optional[NodeSequence] = None

    def __post_init__(self):
        if self.stop < self.start:
            raise InvalidPartitionError(f"empty segment [{self.start}, {self.stop}]")
        if self.nodes is not None and (self.nodes.start != self.start
                                       or self.nodes.stop != self.stop):
            raise InvalidPartitionError(
                f"segment [{self.start}, {self.stop}] does not match its nodes "
                f"[{self.nodes.start}, {self.nodes.stop}]")

    @property
    def direct(self):
        return self.nodes is None

    @property
    def node_count(self):
        return self.stop - self.start + 1 if self.direct else len(self.nodes)


def _as_nodes(nodes):
    return nodes if isinstance(nodes, NodeSequence) else NodeSequence(nodes)


def assemble_weights(k, nodes):
    """Global weights ``W_j(k)`` for the node sequence ``nodes``."""
    nodes = _as_nodes(nodes)
    k = kernel.reduce_wavenumber(k)
    n = nodes.nodes
    w1, w2, w3 = kernel.weights_array(k, n[0:-1:2], n[1::2], n[2::2])
    W = np.zeros(len(nodes), dtype=complex)
    W[0:-1:2] += w1
    W[2::2] += w3
    W[1::2] = w2
    # the panels are half-open, so the last node's own term is added once
    W[-1] += 1.0
    return WeightTable(k, nodes, W)


def dft(f, nodes, k):
    """Approximate ``sum_{n=n_a}^{n_b} f(n) e^{-ikn}`` using only the nodes."""
    table = assemble_weights(k, nodes)
    values = f.values(table.nodes.nodes)
    return TransformResult(complex(table.apply(values)), len(table.nodes), table.nodes.stop)


def series_sum(f, nodes):
    """Weighted sum over the nodes at ``k = 0``; value is real for real ``f``."""
    table = assemble_weights(0.0, nodes)
    values = f.values(table.nodes.nodes)
    return TransformResult(table.apply(values).item(), len(table.nodes), table.nodes.stop)


def sine_transform(f, nodes, k):
    """Approximate ``sum f(n) sin(kn)``; complex when ``f`` is complex."""
    table = assemble_weights(k, nodes)
    return table.sine(f.values(table.nodes.nodes)).item()


def cosine_transform(f, nodes, k):
    """Approximate ``sum f(n) cos(kn)``; complex when ``f`` is complex."""
    table = assemble_weights(k, nodes)
    return table.cosine(f.values(table.nodes.nodes)).item()


def _direct(values, ns, k, kind):
    sin, cos = kernel.sincos_product(k, ns)
    if kind == "dft":
        return (cos - 1j * sin) @ values
    if kind == "sin":
        return sin @ values
    return cos @ values


def check_partition(segments):
    ordered = sorted(segments, key=lambda s: s.start)
    for a, b in zip(ordered, ordered[1:]):
        if b.start <= a.stop:
            raise InvalidPartitionError(
                f"segments [{a.start}, {a.stop}] and [{b.start}, {b.stop}] overlap")
    return ordered


def piecewise_transform(segments, f, k, kind="dft"):
    """Sum the transform over disjoint segments.

    ``kind`` is ``"dft"``, ``"sin"`` or ``"cos"``. Segments without nodes, or
    too short to hold a panel, are summed directly.
    """
    if kind not in ("dft", "sin", "cos"):
        raise ValueError(f"unknown transform kind {kind!r}")
    segments = check_partition(segments)
    if not segments:
        raise InvalidPartitionError("no segments given")
    k = kernel.reduce_wavenumber(k)
    total = 0.0
    count = 0
    for seg in segments:
        if seg.direct or seg.stop - seg.start < 2:
            ns = np.arange(seg.start, seg.stop + 1, dtype=np.int64)
            total = total + _direct(f.values(ns), ns, k, kind)
            count += ns.size
            continue
        table = assemble_weights(k, seg.nodes)
        values = f.values(table.nodes.nodes)
        if kind == "dft":
            total = total + table.apply(values)
        elif kind == "sin":
            total = total + table.sine(values)
        else:
            total = total + table.cosine(values)
        count += len(seg.nodes)
    value = complex(total) if kind == "dft" else np.asarray(total).item()
    return TransformResult(value, count, max(s.stop for s in segments))
