"""Exact signed Bernoulli numbers and even zeta values.

Bernoulli numbers follow the signed convention (B_1 = -1/2) and come from
the binomial recurrence

    sum_{j=0}^{n} C(n+1, j) B_j = 0,   B_0 = 1,

carried out in exact rational arithmetic (``fractions.Fraction``, always in
lowest terms with a positive denominator).  Even zeta values are then

    zeta(2k) / pi^(2k) = (-1)^(k+1) 2^(2k-1) B_{2k} / (2k)!
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

import mpmath

from .errors import CapacityError, DomainError

__all__ = [
    "BERNOULLI_CAP",
    "Rational",
    "ZetaEvenExact",
    "bernoulli",
    "zeta_even_exact",
    "zeta_even",
]

Rational = Fraction

BERNOULLI_CAP = 64


@lru_cache(maxsize=None)
def _bernoulli(n: int) -> Fraction:
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    acc = Fraction(0)
    for j in range(n):
        bj = _bernoulli(j)
        if bj:
            acc += comb(n + 1, j) * bj
    return -acc / (n + 1)


def bernoulli(n: int, cap: int = BERNOULLI_CAP) -> Fraction:
    """Signed Bernoulli number B_n as an exact fraction.

    Raises DomainError for n < 0 and CapacityError for n > cap.
    """
    if n < 0:
        raise DomainError(f"bernoulli index must be >= 0, got {n}")
    if n > cap:
        raise CapacityError(f"bernoulli index {n} exceeds cap {cap}")
    # warm the cache bottom-up so the recursion depth stays shallow
    for j in range(0, n, 32):
        _bernoulli(j)
    return _bernoulli(n)


@dataclass(frozen=True)
class ZetaEvenExact:
    """zeta(order) = coefficient * pi**order with an exact rational coefficient."""

    order: int
    coefficient: Fraction

    def __float__(self) -> float:
        return zeta_even(self.order // 2)


def zeta_even_exact(k: int, cap: int = BERNOULLI_CAP) -> ZetaEvenExact:
    if k < 1:
        raise DomainError(f"zeta_even_exact needs k >= 1, got {k}")
    b = bernoulli(2 * k, cap=cap)
    sign = 1 if k % 2 == 1 else -1
    coef = sign * Fraction(2 ** (2 * k - 1), factorial(2 * k)) * b
    return ZetaEvenExact(order=2 * k, coefficient=coef)


def zeta_even(k: int, cap: int = BERNOULLI_CAP) -> float:
    """zeta(2k) as a float, rounded from a 40-digit evaluation of coef * pi^(2k)."""
    exact = zeta_even_exact(k, cap=cap)
    with mpmath.workdps(40):
        c = exact.coefficient
        val = mpmath.mpf(c.numerator) / c.denominator * mpmath.pi ** (2 * k)
        return float(val)
