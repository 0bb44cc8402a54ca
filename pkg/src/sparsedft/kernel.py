"""Per-panel weights for parabolic-interpolation DFT sums.

A panel is three integer nodes ``n1 < n2 < n3``. On it ``f`` is replaced by
the parabola through ``f(n1), f(n2), f(n3)`` and the half-open sum

    F(k; n1, n3) = sum_{n=n1}^{n3-1} f(n) exp(-i k n)

is carried out analytically. The result is a weighted three-term formula

    F(k; n1, n3) ~ w1 f(n1) e^{-ikn1} + w2 f(n2) e^{-ikn2} + w3 f(n3) e^{-ikn3}.

The weights only need the three geometric moments over ``m = 0 .. L-1``
(``L = n3 - n1``)::

    y  = sum e^{-ikm},   A1 = sum m e^{-ikm},   A2 = sum m^2 e^{-ikm}

which are evaluated with closed forms when ``|k| L`` is large and with a
Taylor series in ``k`` (exact power sums as coefficients) when it is small.
"""
from dataclasses import dataclass
from math import factorial, pi
from typing import NamedTuple

import numpy as np

from .errors import InvalidPanelError
from .powersums import power_sums

#: below this value of |k| L the Taylor path is used
SMALL_K_THRESHOLD = 0.5
#: highest power of k kept in the Taylor path; the first dropped term is
#: below 4e-15 relative at the threshold
TAYLOR_ORDER = 12

_TAYLOR_FACT = np.array([1.0 / factorial(j) for j in range(TAYLOR_ORDER + 1)])


_SPLIT = 134217729.0  # 2**27 + 1


def two_product(a, b):
    """Error-free product: ``a * b == p + e`` exactly (Dekker's algorithm)."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    p = a * b
    t = _SPLIT * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLIT * b
    bh = t - (t - b)
    bl = b - bh
    e = ((ah * bh - p) + ah * bl + al * bh) + al * bl
    return p, e


def sincos_product(a, b):
    """``sin(a*b), cos(a*b)`` without the rounding error of forming ``a*b``."""
    p, e = two_product(a, b)
    sp, cp = np.sin(p), np.cos(p)
    se, ce = np.sin(e), np.cos(e)
    return sp * ce + cp * se, cp * ce - sp * se


def expi(k, n):
    """``exp(-i k n)`` for float ``k`` and integer-valued ``n`` (|n| < 2**53)."""
    s, c = sincos_product(k, np.asarray(n, dtype=float))
    return c - 1j * s


def reduce_wavenumber(k):
    """Map ``k`` into ``[-pi, pi]``; values already inside are untouched."""
    k = float(k)
    if -pi <= k <= pi:
        return k
    r = (k + pi) % (2 * pi) - pi
    return r


class Panel(NamedTuple):
    n1: int
    n2: int
    n3: int


def check_panel(panel):
    n1, n2, n3 = (int(v) for v in panel)
    if not n1 < n2 < n3:
        raise InvalidPanelError(f"panel nodes must satisfy n1 < n2 < n3, got {(n1, n2, n3)}")
    return Panel(n1, n2, n3)


@dataclass(frozen=True)
class YTriple:
    """``y(k)`` and its first two k-derivatives for a span ``L``."""

    y: complex
    y1: complex
    y2: complex
    span: int


@dataclass(frozen=True)
class PanelWeights:
    w1: complex
    w2: complex
    w3: complex

    def __iter__(self):
        return iter((self.w1, self.w2, self.w3))


def _taylor_moments(k, spans):
    # y = sum_j (-ik)^j/j! P_j,  A1 uses P_{j+1},  A2 uses P_{j+2}
    coef = (-1j * k) ** np.arange(TAYLOR_ORDER + 1) * _TAYLOR_FACT
    P = np.array([power_sums(int(L), TAYLOR_ORDER + 2) for L in spans])
    c = coef[::-1]
    y = P[:, TAYLOR_ORDER::-1] @ c
    a1 = P[:, TAYLOR_ORDER + 1:0:-1] @ c
    a2 = P[:, TAYLOR_ORDER + 2:1:-1] @ c
    return y, a1, a2


def _closed_moments(k, L):
    # y = e^{-ik(L-1)/2} D(k) with the Dirichlet kernel D = sin(kL/2)/sin(k/2);
    # A1 = i y', A2 = -y'' follow from differentiating that product.
    h = 0.5 * k
    s, c = np.sin(h), np.cos(h)
    u, uc = sincos_product(L, h)
    D = u / s
    dD = (0.5 * L * uc * s - 0.5 * u * c) / (s * s)
    ddD = -0.25 * (L * L - 1.0) * D - (c / s) * dD
    half = 0.5 * (L - 1.0)
    phase = expi(h, L - 1.0)
    y = phase * D
    dy = phase * (dD - 1j * half * D)
    ddy = phase * (ddD - 2j * half * dD - half * half * D)
    return y, 1j * dy, -ddy


def moments(k, spans):
    """Geometric moments ``(y, A1, A2)`` for each span in ``spans``.

    ``spans`` is an integer array (each >= 1); ``k`` a reduced wavenumber.
    Returns three complex arrays of the same shape.
    """
    spans = np.asarray(spans, dtype=np.int64)
    L = spans.astype(float)
    if k == 0.0:
        y = L.astype(complex)
        a1 = (L * (L - 1.0) / 2.0).astype(complex)
        a2 = (L * (L - 1.0) * (2.0 * L - 1.0) / 6.0).astype(complex)
        return y, a1, a2
    y = np.empty(L.shape, complex)
    a1 = np.empty(L.shape, complex)
    a2 = np.empty(L.shape, complex)
    small = np.abs(k) * L < SMALL_K_THRESHOLD
    if small.any():
        y[small], a1[small], a2[small] = _taylor_moments(k, spans[small])
    big = ~small
    if big.any():
        y[big], a1[big], a2[big] = _closed_moments(k, L[big])
    return y, a1, a2


def y_triple(k, span):
    """Return ``y(k) = sum_{n=0}^{L-1} e^{-ikn}`` with its first two k-derivatives.

    Raises ``InvalidPanelError`` for ``span < 2``.
    """
    span = int(span)
    if span < 2:
        raise InvalidPanelError(f"panel span must be >= 2, got {span}")
    k = reduce_wavenumber(k)
    y, a1, a2 = moments(k, np.array([span]))
    return YTriple(complex(y[0]), complex(-1j * a1[0]), complex(-a2[0]), span)


def weights_zero(n1, n2, n3):
    """Real k = 0 panel weights for arrays of panel nodes."""
    d2 = (np.asarray(n2) - np.asarray(n1)).astype(float)
    d3 = (np.asarray(n3) - np.asarray(n1)).astype(float)
    d32 = (np.asarray(n3) - np.asarray(n2)).astype(float)
    w1 = (d3 + 1.0) * (3.0 * d2 - d3 + 1.0) / (6.0 * d2)
    w2 = d3 * (d3 * d3 - 1.0) / (6.0 * d2 * d32)
    w3 = (d3 - 1.0) * (2.0 * d32 - d2 - 1.0) / (6.0 * d32)
    return w1, w2, w3


def weights_array(k, n1, n2, n3):
    """Vectorised panel weights; ``n1, n2, n3`` are int64 arrays.

    No validation is done here; callers guarantee ``n1 < n2 < n3``.
    """
    if k == 0.0:
        w1, w2, w3 = weights_zero(n1, n2, n3)
        return w1.astype(complex), w2.astype(complex), w3.astype(complex)
    n1 = np.asarray(n1, dtype=np.int64)
    n2 = np.asarray(n2, dtype=np.int64)
    n3 = np.asarray(n3, dtype=np.int64)
    # spans are exact in int64; lift to float before any product
    d2 = (n2 - n1).astype(float)
    d3 = (n3 - n1).astype(float)
    d32 = (n3 - n2).astype(float)
    y, a1, a2 = moments(k, n3 - n1)
    w1 = y + (a2 - (d2 + d3) * a1) / (d2 * d3)
    w2 = (d3 * a1 - a2) / (d2 * d32) * expi(-k, d2)
    w3 = (a2 - d2 * a1) / (d3 * d32) * expi(-k, d3)
    return w1, w2, w3


def panel_weights(k, panel):
    """Weights ``(w1, w2, w3)`` for one panel at wavenumber ``k``.

    Examples
    --------
    >>> panel_weights(0.0, (0, 2, 4))
    PanelWeights(w1=(1.25+0j), w2=(2.5+0j), w3=(0.25+0j))
    """
    n1, n2, n3 = check_panel(panel)
    k = reduce_wavenumber(k)
    w = weights_array(k, np.array([n1]), np.array([n2]), np.array([n3]))
    return PanelWeights(*(complex(v[0]) for v in w))


def panel_sum(k, panel, f1, f2, f3):
    """Approximate ``sum_{n=n1}^{n3-1} f(n) e^{-ikn}`` from three samples."""
    p = check_panel(panel)
    k = reduce_wavenumber(k)
    w1, w2, w3 = panel_weights(k, p)
    e = expi(k, np.array(p, dtype=float))
    return complex(w1 * f1 * e[0] + w2 * f2 * e[1] + w3 * f3 * e[2])
