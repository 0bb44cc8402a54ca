"""Exact power sums ``sum_{n=0}^{L-1} n**m`` from Faulhaber's formula."""
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd

MAX_POWER = 16


def _bernoulli(count):
    # B_1 = -1/2 convention, which is the one that sums n = 0 .. L-1
    b = [Fraction(1)]
    for m in range(1, count):
        b.append(-sum(comb(m + 1, j) * b[j] for j in range(m)) / (m + 1))
    return b


def _integer_coefficients():
    bern = _bernoulli(MAX_POWER + 1)
    table = []
    for m in range(MAX_POWER + 1):
        # coefficient of L**(m+1-j) is comb(m+1, j) B_j / (m+1)
        coeffs = [Fraction(comb(m + 1, j)) * bern[j] / (m + 1) for j in range(m + 1)]
        denom = 1
        for c in coeffs:
            denom = denom * c.denominator // gcd(denom, c.denominator)
        table.append(([int(c * denom) for c in coeffs], denom))
    return table


_COEFFS = _integer_coefficients()


def power_sum_exact(m, L):
    """Return ``sum_{n=0}^{L-1} n**m`` as a Python int."""
    if not 0 <= m <= MAX_POWER:
        raise ValueError(f"power m={m} outside supported range 0..{MAX_POWER}")
    L = int(L)
    if L < 1:
        raise ValueError(f"L must be >= 1, got {L}")
    ints, denom = _COEFFS[m]
    total = 0
    for j, c in enumerate(ints):
        total += c * L ** (m + 1 - j)
    q, r = divmod(total, denom)
    assert r == 0
    return q


@lru_cache(maxsize=4096)
def power_sums(L, top=MAX_POWER):
    """Tuple of floats ``(P_0, ..., P_top)`` for span L, each rounded once."""
    return tuple(float(power_sum_exact(m, L)) for m in range(top + 1))
