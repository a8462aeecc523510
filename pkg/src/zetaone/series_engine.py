"""Truncated-series oracles with rigorous tail brackets, and the classical identities.

Every series here has positive terms f(n) that decrease in n.  For a
truncation point N the integral test gives

    int_{N+1}^inf f  <=  sum_{n>N} f(n)  <=  int_N^inf f.

Since f itself has no elementary antiderivative in the zeta-one cases, it is
sandwiched between simpler functions g_lo <= f <= g_hi:

    zeta:        f = x^-s
    plus-one:    x^-s - x^-2s  <=  1/(x^s + 1)  <=  x^-s
    minus-one:   x^-s  <=  1/(x^s - 1)  <=  x^-s / (1 - N^-s)      (x >= N)

The reported value is the partial sum plus the lower tail integral; the true
sum lies in [value, value + error_bound] with error_bound equal to the width
of the bracket (roughly N^-s).  The value is nondecreasing in N, so a run at
a tighter tolerance never moves by more than the looser run's error_bound.

Partial sums run in ascending n, in fixed chunks; each chunk is reduced by
numpy and chunk totals are accumulated in order, so results are bit-for-bit
reproducible.
"""

from __future__ import annotations

import math
import os
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .bernoulli_zeta import zeta_even
from .closed_forms import EvalResult, zeta_minus_one_even
from .errors import CapacityError, DomainError

__all__ = [
    "DEFAULT_TERM_CAP",
    "IDENTITY_IDS",
    "IdentityReport",
    "term_cap",
    "zeta_int_series",
    "zeta_plus_one_series",
    "zeta_minus_one_series",
    "zeta_minus_one_tail",
    "shallit_zikan_partial",
    "even_sum_partial",
    "zeta_mod_sum_partial",
    "iroot",
    "is_perfect_power",
    "perfect_powers_upto",
    "euler_goldbach_partial",
    "euler_goldbach_exact",
]

DEFAULT_TERM_CAP = 10**8
PERFECT_POWER_CAP = 10**12
MIN_TOL = 1e-14
_CHUNK = 1 << 20
_EPS = 2.0**-52

IDENTITY_IDS = ("euler_goldbach", "shallit_zikan", "even_sum_3_4", "zeta4k_sum", "zeta2mk_sum")


def term_cap() -> int:
    """Per-call term cap; ZETAONE_TERM_CAP overrides the default."""
    raw = os.environ.get("ZETAONE_TERM_CAP")
    if raw is None or raw.strip() == "":
        return DEFAULT_TERM_CAP
    try:
        cap = int(float(raw))
    except ValueError as exc:
        raise DomainError(f"ZETAONE_TERM_CAP is not a number: {raw!r}") from exc
    if cap < 1:
        raise DomainError(f"ZETAONE_TERM_CAP must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class IdentityReport:
    identity_id: str
    limit: int
    partial_sum: float
    tail_bound: float
    target: float
    residual: float

    @property
    def holds(self) -> bool:
        return self.residual <= self.tail_bound + 1e-10

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "IdentityReport":
        return cls(
            identity_id=str(d["identity_id"]),
            limit=int(d["limit"]),
            partial_sum=float(d["partial_sum"]),
            tail_bound=float(d["tail_bound"]),
            target=float(d["target"]),
            residual=float(d["residual"]),
        )


# -- tail brackets ---------------------------------------------------------


def _power_tail(N: float, s: int) -> float:
    """int_N^inf x^-s dx."""
    return N ** (1 - s) / (s - 1)


def _power_tail_gap(N: float, s: int) -> float:
    """int_N^{N+1} x^-s dx, without cancellation."""
    return -_power_tail(N, s) * math.expm1((1 - s) * math.log1p(1.0 / N))


def _bracket_zeta(N: int, s: int) -> tuple[float, float]:
    return _power_tail(N + 1.0, s), _power_tail_gap(float(N), s)


def _bracket_plus(N: int, s: int) -> tuple[float, float]:
    second = (N + 1.0) ** (1 - 2 * s) / (2 * s - 1)
    lower = _power_tail(N + 1.0, s) - second
    return lower, _power_tail_gap(float(N), s) + second


def _bracket_minus(N: int, s: int) -> tuple[float, float]:
    q = float(N) ** (-s)
    lower = _power_tail(N + 1.0, s)
    return lower, _power_tail_gap(float(N), s) + _power_tail(float(N), s) * q / (1.0 - q)


def _terms_zeta(n: np.ndarray, s: int) -> np.ndarray:
    return np.power(n, -s)


def _terms_plus(n: np.ndarray, s: int) -> np.ndarray:
    x = np.power(n, -s)
    return x / (1.0 + x)


def _terms_minus(n: np.ndarray, s: int) -> np.ndarray:
    x = np.power(n, -s)
    return x / (1.0 - x)


_Bracket = Callable[[int, int], tuple[float, float]]
_Terms = Callable[[np.ndarray, int], np.ndarray]


def _choose_n(bracket: _Bracket, s: int, start: int, tol: float) -> int:
    """Smallest N >= start with bracket width <= tol."""
    cap = term_cap()

    def ok(N: int) -> bool:
        return bracket(N, s)[1] <= tol

    lo = start
    if ok(lo):
        return lo
    hi = max(lo + 1, int(tol ** (-1.0 / s)))
    while not ok(hi):
        if hi > cap:
            raise CapacityError(
                f"series for s={s} needs more than {cap} terms to reach tol={tol:g}"
            )
        lo, hi = hi, 2 * hi
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    if hi - start + 1 > cap:
        raise CapacityError(f"series for s={s} needs {hi - start + 1} terms, cap is {cap}")
    return hi


def _partial_sum(terms: _Terms, s: int, start: int, N: int) -> float:
    acc = 0.0
    for lo in range(start, N + 1, _CHUNK):
        hi = min(lo + _CHUNK, N + 1)
        acc += float(np.sum(terms(np.arange(lo, hi, dtype=np.float64), s)))
    return acc


def _series(terms: _Terms, bracket: _Bracket, s: int, start: int, tol: float) -> EvalResult:
    N = _choose_n(bracket, s, start, tol)
    lower, width = bracket(N, s)
    value = _partial_sum(terms, s, start, N) + lower
    return EvalResult(
        value=value,
        method="series",
        error_bound=width,
        terms_used=N - start + 1,
        residual_imag=0.0,
    )


def _check(s: int, tol: float) -> None:
    if not isinstance(s, int) or s < 2:
        raise DomainError(f"s must be an integer >= 2, got {s!r}")
    if not tol >= MIN_TOL:
        raise DomainError(f"tol must be >= {MIN_TOL:g}, got {tol!r}")


def zeta_int_series(s: int, tol: float) -> EvalResult:
    """zeta(s) = sum_{n>=1} n^-s, truncated with a certified bracket."""
    _check(s, tol)
    return _series(_terms_zeta, _bracket_zeta, s, 1, tol)


def zeta_plus_one_series(s: int, tol: float) -> EvalResult:
    """zeta_{+1}(s) = sum_{n>=1} 1/(n^s + 1)."""
    _check(s, tol)
    return _series(_terms_plus, _bracket_plus, s, 1, tol)


def zeta_minus_one_series(s: int, tol: float) -> EvalResult:
    """zeta_{-1}(s) = sum_{n>=2} 1/(n^s - 1)."""
    _check(s, tol)
    return _series(_terms_minus, _bracket_minus, s, 2, tol)


def zeta_minus_one_tail(s: int, tol: float = 1e-15) -> EvalResult:
    """zeta(s) - 1 = sum_{n>=2} n^-s, summed directly so nothing cancels.

    Used by the identity checks, which need tighter tolerances than the
    public series entry points accept.
    """
    if not isinstance(s, int) or s < 2:
        raise DomainError(f"s must be an integer >= 2, got {s!r}")
    return _series(_terms_zeta, _bracket_zeta, s, 2, tol)


# -- identities ------------------------------------------------------------


def _report(identity_id: str, limit: int, partial: float, tail: float, target: float) -> IdentityReport:
    return IdentityReport(
        identity_id=identity_id,
        limit=limit,
        partial_sum=partial,
        tail_bound=tail,
        target=target,
        residual=abs(partial - target),
    )


def shallit_zikan_partial(K: int) -> IdentityReport:
    """sum_{k=2}^{K} (zeta(k) - 1), which tends to 1.

    Tail: sum_{k>K} (zeta(k) - 1) = sum_{n>=2} n^-K / (n - 1); the n = 2 term
    is 2^-K and the rest is at most 2^-K * 2/(K-1).  The per-term series
    brackets are added on top.
    """
    if not isinstance(K, int) or not 2 <= K <= 200:
        raise DomainError(f"K must be an integer in 2..200, got {K!r}")
    partial = 0.0
    series_err = 0.0
    for k in range(2, K + 1):
        r = zeta_minus_one_tail(k, 1e-15)
        partial += r.value
        series_err += r.error_bound
    tail = 2.0**-K * (1.0 + 2.0 / (K - 1)) + series_err + K * _EPS
    return _report("shallit_zikan", K, partial, tail, 1.0)


def even_sum_partial(K: int) -> IdentityReport:
    """sum_{k=1}^{K} (zeta(2k) - 1), which tends to 3/4.

    Tail: sum_{n>=2} n^-2K / (n^2 - 1) <= 2 * 4^-K.  Each zeta(2k) comes from
    the exact Bernoulli value and is good to a few ulp.
    """
    if not isinstance(K, int) or not 1 <= K <= 100:
        raise DomainError(f"K must be an integer in 1..100, got {K!r}")
    partial = 0.0
    for k in range(1, K + 1):
        partial += zeta_even(k, cap=max(64, 2 * K)) - 1.0
    tail = 2.0 * 4.0**-K + 8 * K * _EPS
    return _report("even_sum_3_4", K, partial, tail, 0.75)


def zeta_mod_sum_partial(m: int, K: int) -> IdentityReport:
    """sum_{k=1}^{K} (zeta(2mk) - 1), which tends to zeta_{-1}(2m).

    Swapping the double sum over n >= 2, k >= 1 gives sum_n 1/(n^(2m) - 1).
    Tail, with j = 2m(K+1):
        sum_{n>=2} n^-j / (1 - n^-2m) <= (4/3) 2^-j (1 + 2/(j-1)).
    """
    if not isinstance(m, int) or not 1 <= m <= 10:
        raise DomainError(f"m must be an integer in 1..10, got {m!r}")
    if not isinstance(K, int) or not 1 <= K <= 100:
        raise DomainError(f"K must be an integer in 1..100, got {K!r}")
    partial = 0.0
    series_err = 0.0
    for k in range(1, K + 1):
        r = zeta_minus_one_tail(2 * m * k, 1e-15)
        partial += r.value
        series_err += r.error_bound
    j = 2 * m * (K + 1)
    target = zeta_minus_one_even(m)
    tail = (4.0 / 3.0) * 2.0**-j * (1.0 + 2.0 / (j - 1)) + series_err + target.error_bound + K * _EPS
    ident = "zeta4k_sum" if m == 2 else "zeta2mk_sum"
    return _report(ident, K, partial, tail, target.value)


# -- perfect powers --------------------------------------------------------


def iroot(x: int, m: int) -> int:
    """floor(x ** (1/m)) for integers x >= 0, m >= 1."""
    if x < 0 or m < 1:
        raise DomainError(f"iroot needs x >= 0 and m >= 1, got x={x}, m={m}")
    if x < 2 or m == 1:
        return x
    r = int(round(x ** (1.0 / m)))
    while r**m > x:
        r -= 1
    while (r + 1) ** m <= x:
        r += 1
    return r


def is_perfect_power(p: int) -> bool:
    if p < 4:
        return False
    return any(iroot(p, m) ** m == p for m in range(2, p.bit_length() + 1))


def _check_p(P: int) -> None:
    if not isinstance(P, int) or P < 4:
        raise DomainError(f"P must be an integer >= 4, got {P!r}")
    if P > PERFECT_POWER_CAP:
        raise CapacityError(f"P={P} exceeds cap {PERFECT_POWER_CAP}")


def perfect_powers_upto(P: int) -> list[int]:
    """Distinct n^m <= P with n, m >= 2, ascending."""
    _check_p(P)
    found: set[int] = set()
    m = 2
    while 2**m <= P:
        n = 2
        while True:
            p = n**m
            if p > P:
                break
            found.add(p)
            n += 1
        m += 1
    return sorted(found)


def _euler_goldbach_tail(P: int) -> float:
    """Upper bound on sum of 1/(p-1) over perfect powers p > P (duplicates over-counted).

    For 2 <= m <= M = floor(log2 P) the bases start at n_m = floor(P^(1/m)) + 1
    and sum_{n>=n_m} 1/(n^m - 1) <= 1/(n_m^m - 1) + n_m^(1-m) / ((m-1)(1 - n_m^-m)).
    Exponents m > M admit every base n >= 2; together they contribute at most
    2^(1-M) (1 + 2/M).
    """
    M = P.bit_length() - 1
    tail = 0.0
    for m in range(2, M + 1):
        n0 = iroot(P, m) + 1
        pm = float(n0) ** m
        tail += 1.0 / (pm - 1.0) + float(n0) ** (1 - m) / ((m - 1) * (1.0 - 1.0 / pm))
    tail += 2.0 ** (1 - M) * (1.0 + 2.0 / M)
    return tail


def euler_goldbach_partial(P: int) -> IdentityReport:
    """Sum of 1/(p-1) over distinct perfect powers p <= P; tends to 1."""
    powers = perfect_powers_upto(P)
    partial = 0.0
    for p in powers:
        partial += 1.0 / (p - 1)
    tail = _euler_goldbach_tail(P) + len(powers) * _EPS
    return _report("euler_goldbach", P, partial, tail, 1.0)


def euler_goldbach_exact(P: int) -> Fraction:
    """Exact rational partial sum; only sensible for small P."""
    return sum((Fraction(1, p - 1) for p in perfect_powers_upto(P)), Fraction(0))
