"""Closed forms for zeta_{+1}(2m) and zeta_{-1}(2m).

    zeta_{+1}(2m) = -1/2 + (1/2m) sum_{k=1}^{m} pi a_k cot(pi a_k),      a_k = exp(i pi (2k-1) / 2m)
    zeta_{-1}(2m) = 1/2 + (2m-1)/4m - (pi/4m) sum_{k != m} b_k cot(pi b_k),  b_k = exp(i pi k / m)

The root sums are real: terms come in conjugate pairs (k with m+1-k for the
plus family, k with 2m-k for the minus family).  They are accumulated pair
by pair in ascending k, and whatever imaginary part survives is reported as
``residual_imag`` rather than dropped silently.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .complex_special import alpha_root, beta_root, cot_pi, coth_real, tanh_real
from .errors import DomainError, UnsupportedError

__all__ = [
    "M_MAX",
    "EvalResult",
    "plus_root_pairs",
    "minus_root_pairs",
    "zeta_plus_one_even",
    "zeta_minus_one_even",
    "zeta_plus_one_real",
    "zeta_minus_one_real",
]

M_MAX = 50
# relative accuracy promised by cot_pi away from its poles
_COT_REL = 1e-13
_EPS = 2.0**-52

METHODS = ("closed_form", "real_form", "series")


@dataclass(frozen=True)
class EvalResult:
    value: float
    method: str
    error_bound: float
    terms_used: int = 0
    residual_imag: float = 0.0

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "EvalResult":
        return cls(
            value=float(d["value"]),
            method=str(d["method"]),
            error_bound=float(d["error_bound"]),
            terms_used=int(d["terms_used"]),
            residual_imag=float(d["residual_imag"]),
        )


def _check_m(m: int) -> None:
    if not isinstance(m, int) or not 1 <= m <= M_MAX:
        raise DomainError(f"m must be an integer in 1..{M_MAX}, got {m!r}")


def _root_term(z: complex) -> complex:
    return math.pi * z * cot_pi(z)


def plus_root_pairs(m: int) -> list[tuple[int, int, complex]]:
    """(k, partner, term_k + term_partner) for the zeta_{+1} root sum.

    term_k = pi a_k cot(pi a_k).  For odd m the middle index pairs with
    itself and appears once.
    """
    pairs = []
    for k in range(1, (m + 1) // 2 + 1):
        partner = m + 1 - k
        s = _root_term(alpha_root(m, k))
        if partner != k:
            s += _root_term(alpha_root(m, partner))
        pairs.append((k, partner, s))
    return pairs


def minus_root_pairs(m: int) -> list[tuple[int, int, complex]]:
    """(k, 2m-k, term_k + term_{2m-k}) for k = 1..m-1, term_k = b_k cot(pi b_k)."""
    pairs = []
    for k in range(1, m):
        z1 = beta_root(m, k)
        z2 = beta_root(m, 2 * m - k)
        pairs.append((k, 2 * m - k, z1 * cot_pi(z1) + z2 * cot_pi(z2)))
    return pairs


def zeta_plus_one_even(m: int) -> EvalResult:
    """zeta_{+1}(2m) = sum_{n>=1} 1/(n^(2m)+1) from the residue closed form."""
    _check_m(m)
    total = 0j
    mag = 0.0
    for _, _, s in plus_root_pairs(m):
        total += s
        mag += abs(s)
    value = -0.5 + total.real / (2 * m)
    return EvalResult(
        value=value,
        method="closed_form",
        error_bound=_COT_REL * mag / (2 * m) + 4 * _EPS,
        residual_imag=abs(total.imag) / (2 * m),
    )


def zeta_minus_one_even(m: int) -> EvalResult:
    """zeta_{-1}(2m) = sum_{n>=2} 1/(n^(2m)-1) from the residue closed form."""
    _check_m(m)
    total = 0j
    mag = 0.0
    for _, _, s in minus_root_pairs(m):
        total += s
        mag += abs(s)
    const = 0.5 + (2 * m - 1) / (4 * m)
    scale = math.pi / (4 * m)
    return EvalResult(
        value=const - scale * total.real,
        method="closed_form",
        error_bound=_COT_REL * scale * mag + 4 * _EPS,
        residual_imag=scale * abs(total.imag),
    )


def zeta_plus_one_real(m: int) -> EvalResult:
    """Real-trigonometric form of zeta_{+1}(2m), m in {1, 2, 3}."""
    pi = math.pi
    if m == 1:
        value = -0.5 + pi / 2 * coth_real(pi)
    elif m == 2:
        t = math.sqrt(2) * pi
        value = -0.5 + math.sqrt(2) * pi / 4 * (math.sin(t) + math.sinh(t)) / (
            math.cosh(t) - math.cos(t)
        )
    elif m == 3:
        t = math.sqrt(3) * pi
        value = -0.5 + pi / 6 * (
            (math.sqrt(3) * math.sin(t) + math.sinh(pi)) / (math.cosh(pi) - math.cos(t))
            + coth_real(pi)
        )
    else:
        raise UnsupportedError(f"real form of zeta_plus_one known only for m in {{1,2,3}}, got {m}")
    return EvalResult(value=value, method="real_form", error_bound=16 * _EPS)


def zeta_minus_one_real(m: int) -> EvalResult:
    """Real-trigonometric form of zeta_{-1}(2m), m in {1, 2, 3}."""
    pi = math.pi
    if m == 1:
        value = 0.75
    elif m == 2:
        value = 7 / 8 - pi / 4 * coth_real(pi)
    elif m == 3:
        value = 11 / 12 - math.sqrt(3) / 6 * pi * tanh_real(math.sqrt(3) * pi / 2)
    else:
        raise UnsupportedError(f"real form of zeta_minus_one known only for m in {{1,2,3}}, got {m}")
    return EvalResult(value=value, method="real_form", error_bound=16 * _EPS)
