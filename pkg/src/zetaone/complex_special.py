"""Complex cotangent, real hyperbolic helpers and the roots of z^(2m) +/- 1.

Complex values are plain Python ``complex`` numbers.
"""

from __future__ import annotations

import math

from .errors import DomainError, PoleError

__all__ = [
    "POLE_TOL",
    "SATURATION_Y",
    "cot_rect",
    "cot_pi",
    "coth_real",
    "tanh_real",
    "alpha_root",
    "beta_root",
]

POLE_TOL = 1e-12
# cot(x + iy) = -i sign(y) + O(exp(-2|y|)); exp(-40) is far below one ulp
SATURATION_Y = 20.0


def cot_rect(x: float, y: float) -> complex:
    """cot(x + iy) from real components.

    Uses cot(x+iy) = (sin 2x - i sinh 2y) / (cosh 2y - cos 2x) with the
    denominator rewritten as 2 (sin^2 x + sinh^2 y), which has no
    cancellation near the poles x = k*pi, y = 0.
    """
    k = round(x / math.pi)
    if math.hypot(x - k * math.pi, y) < POLE_TOL:
        raise PoleError(f"cot has a pole at {k}*pi", pole=complex(k * math.pi, 0.0))
    if abs(y) > SATURATION_Y:
        return complex(0.0, -math.copysign(1.0, y))
    sx = math.sin(x)
    shy = math.sinh(y)
    den = 2.0 * (sx * sx + shy * shy)
    return complex(math.sin(2.0 * x) / den, -math.sinh(2.0 * y) / den)


def cot_pi(z: complex) -> complex:
    """cot(pi z).  The real part is reduced modulo 1 first (exactly)."""
    z = complex(z)
    r = math.remainder(z.real, 1.0)
    if math.hypot(r, z.imag) < POLE_TOL:
        raise PoleError(
            f"cot(pi z) has a pole at z = {z.real - r:g}",
            pole=complex(z.real - r, 0.0),
        )
    return cot_rect(math.pi * r, math.pi * z.imag)


def coth_real(t: float) -> float:
    if not t > 0:
        raise DomainError(f"coth_real needs t > 0, got {t}")
    return 1.0 / math.tanh(t)


def tanh_real(t: float) -> float:
    return math.tanh(t)


def alpha_root(m: int, k: int) -> complex:
    """alpha^(2k-1) with alpha = exp(i pi / 2m); the roots of z^(2m) + 1 in Im z > 0."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if not 1 <= k <= m:
        raise DomainError(f"alpha_root needs 1 <= k <= m={m}, got k={k}")
    theta = math.pi * (2 * k - 1) / (2 * m)
    return complex(math.cos(theta), math.sin(theta))


def beta_root(m: int, k: int) -> complex:
    """beta^k with beta = exp(i pi / m), for the simple roots of z^(2m) - 1 other than +/-1."""
    if m < 1:
        raise DomainError(f"m must be >= 1, got {m}")
    if not 1 <= k <= 2 * m - 1 or k == m:
        raise DomainError(f"beta_root needs 1 <= k <= {2 * m - 1}, k != {m}; got k={k}")
    theta = math.pi * k / m
    return complex(math.cos(theta), math.sin(theta))
