"""Node-selection plans.

Three constructions are provided:

* ``q_sequence``: geometrically growing integers ``floor(q**(j-1))`` with a
  fallback to ``j`` while the power is still too small to be strictly
  increasing.
* ``hybrid_nodes``: equal spacing over a flat head ``[1, N0]`` followed by a
  geometric tail up to a cutoff ``N``.
* ``split_nodes``: two segments around an interior singularity at ``N0``,
  with nodes crowded on both sides of it.
"""
from dataclasses import dataclass
from math import floor, pi

import numpy as np

from .errors import (InvalidCountError, InvalidCutoffError, InvalidRatioError,
                     InvalidSequenceError)
from .transform import NodeSequence, Segment

DEFAULT_M = 151


@dataclass(frozen=True)
class QSequenceSpec:
    q: float = 1.15
    M: int = DEFAULT_M


@dataclass(frozen=True)
class HybridSpec:
    N0: int
    N: int
    M: int = DEFAULT_M

    @property
    def m0(self):
        return min(self.N0, (4 * self.M) // 5)

    @classmethod
    def for_lorentzian(cls, a, M=DEFAULT_M):
        """Flat-head boundary and cutoff for ``f(n) = 1/((n pi/a)^2 + 1)``."""
        N = max(300, floor(300 * a / pi))
        N0 = floor(4 * a / pi) + 1
        return cls(N0, N, M)


@dataclass(frozen=True)
class SplitSpec:
    N0: int
    N: int
    q_dense: float = 1.1
    M: int = DEFAULT_M
    #: region 1 is summed term by term when N0 is at most this
    direct_threshold: int = 301

    @classmethod
    def for_resonant(cls, a, M=DEFAULT_M, q_dense=1.1):
        """Split around the pole of ``f(n) = 1/((n pi/a)^2 - 1)``."""
        N0 = floor(a / pi)
        return cls(N0, max(1, N0) * 10_000, q_dense, M)


def q_integers(q):
    """Endless strictly increasing q-sequence ``1, 2, ..., floor(q**(j-1)), ...``.

    A value that does not exceed its predecessor is skipped, so the
    output never repeats.
    """
    if not q > 1.0:
        raise InvalidRatioError(f"growth ratio must exceed 1, got {q}")
    last = 0
    j = 1
    while True:
        n = floor(q ** (j - 1))
        if n <= j:
            n = j
        if n > last:
            yield n
            last = n
        j += 1


def _check_count(M):
    if M < 3 or M % 2 == 0:
        raise InvalidCountError(f"node count must be odd and >= 3, got {M}")


def q_sequence(spec):
    """The first ``spec.M`` integers of the q-sequence with ratio ``spec.q``.

    >>> list(q_sequence(QSequenceSpec(q=2.0, M=5)))
    [1, 2, 4, 8, 16]
    """
    _check_count(spec.M)
    gen = q_integers(spec.q)
    return NodeSequence([next(gen) for _ in range(spec.M)])


def clamp_end(nodes, stop):
    """Force the last node to ``stop`` and push earlier nodes down to keep ascent."""
    nodes = list(nodes)
    nodes[-1] = stop
    for i in range(len(nodes) - 2, -1, -1):
        if nodes[i] >= nodes[i + 1]:
            nodes[i] = nodes[i + 1] - 1
    return nodes


def make_odd(nodes):
    """Return ``nodes`` with one node added at the widest gap if the count is even."""
    nodes = sorted(set(int(v) for v in nodes))
    if len(nodes) % 2 == 1:
        return nodes
    gaps = np.diff(nodes)
    i = int(np.argmax(gaps))
    if gaps[i] >= 2:
        nodes.insert(i + 1, nodes[i] + int(gaps[i]) // 2)
    elif len(nodes) > 3:
        # every gap is 1: dropping an interior node keeps the endpoints
        del nodes[-2]
    else:
        raise InvalidSequenceError(f"cannot make {nodes} odd-length")
    return nodes


def equal_spaced(lo, hi, count):
    """``count`` rounded, equally spaced integers from ``lo`` to ``hi`` inclusive."""
    if count == 1:
        return [lo]
    return [int(v) for v in np.rint(np.linspace(lo, hi, count))]


def hybrid_nodes(spec):
    """Equal spacing on ``[1, N0]``, unit steps, then a geometric tail to ``N``."""
    N0, N, M = spec.N0, spec.N, spec.M
    _check_count(M)
    if N0 < 1:
        raise InvalidCutoffError(f"flat-region boundary must be >= 1, got {N0}")
    if N <= N0:
        raise InvalidCutoffError(f"cutoff N={N} must exceed N0={N0}")
    m0 = spec.m0
    if m0 >= M:
        raise InvalidCountError(f"flat count m0={m0} leaves no tail nodes (M={M})")
    if N - N0 < M - m0:
        raise InvalidCutoffError(f"range ({N0}, {N}] too short for {M - m0} tail nodes")
    q = (N / N0) ** (1.0 / (M - m0))
    nodes = equal_spaced(1, N0, m0)
    geometric = False
    for _ in range(M - m0):
        prev = nodes[-1]
        cand = floor(q * prev)
        if cand > prev:
            geometric = True
        nodes.append(cand if geometric else prev + 1)
    if not geometric:
        raise InvalidCountError(
            f"unit steps used the whole budget M={M} before the geometric tail "
            f"could start (reached {nodes[-1]}, cutoff {N})")
    return NodeSequence(clamp_end(nodes, N))


def _dense_before(N0, q):
    """Region-1 nodes in ``[1, N0]``, crowded toward ``N0``."""
    tilde = []
    for n in q_integers(q):
        tilde.append(n)
        if n > N0:
            break
    j0 = len(tilde)
    m1 = j0 if j0 % 2 == 1 else j0 - 1
    # n_1 = 1, n_j = N0 + 1 - tilde_{m1+1-j} for j = 2..m1
    nodes = [1] + [N0 + 1 - tilde[m1 - j] for j in range(2, m1 + 1)]
    return make_odd(nodes)


def split_nodes(spec):
    """Segments ``[1, N0]`` and ``[N0+1, N]`` for a pole just above ``N0``.

    Region 1 is omitted when ``N0 == 0`` and summed directly when
    ``N0 <= spec.direct_threshold``.
    """
    N0, N, M = spec.N0, spec.N, spec.M
    _check_count(M)
    if N0 < 0:
        raise InvalidCutoffError(f"N0 must be >= 0, got {N0}")
    if N - N0 < M:
        raise InvalidCutoffError(f"region ({N0}, {N}] too short for {M} nodes")
    segments = []
    if N0 > spec.direct_threshold:
        segments.append(Segment(1, N0, NodeSequence(_dense_before(N0, spec.q_dense))))
    elif N0 >= 1:
        segments.append(Segment(1, N0))
    q = (N - N0) ** (1.0 / (M - 1))
    tail = q_sequence(QSequenceSpec(q, M))
    region2 = clamp_end([N0 + int(v) for v in tail], N)
    segments.append(Segment(N0 + 1, N, NodeSequence(region2)))
    return segments
