"""Numerical checks of the residue computations behind the two closed forms.

The integrands are

    f(z) = cot(pi z) / (z^(2m) + 1)        g(z) = cot(pi z) / (z^(2m) - 1)

integrated counterclockwise over the square C(N) with corners
+/-(N+1/2) +/- (N+1/2)i.  No pole lies on C(N): the integer poles sit half a
unit from the vertical sides and the roots of z^(2m) +/- 1 lie on the unit
circle.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

from .closed_forms import minus_root_pairs
from .complex_special import alpha_root, beta_root, cot_pi, coth_real
from .errors import DomainError, QuadratureError, WrongPoleError

__all__ = [
    "FUNCTION_IDS",
    "M_MAX_CONTOUR",
    "N_MAX_CONTOUR",
    "RESIDUE_THEOREM_TOL",
    "ContourSpec",
    "ResidueReport",
    "ContourReport",
    "integrand",
    "residue_f_integer",
    "residue_f_root",
    "residue_g_integer",
    "residue_g_root",
    "residue_g_double",
    "enclosed_poles",
    "circle_residue",
    "double_pole_residue_fd",
    "check_residues",
    "gauss_kronrod_15",
    "adaptive_quad",
    "contour_integral",
    "lemma_bound",
    "verify",
    "reconstruct_zeta_plus_one",
    "reconstruct_zeta_minus_one",
    "theorem2_balance",
]

FUNCTION_IDS = ("f", "g")
M_MAX_CONTOUR = 6
N_MAX_CONTOUR = 20
QUAD_TOL = 1e-9
QUAD_MAX_DEPTH = 30
RESIDUE_THEOREM_TOL = 1e-6
BOUND_SLACK = 1e-6
SIMPLE_RESIDUE_TOL = 1e-8
DOUBLE_RESIDUE_TOL = 1e-6
CIRCLE_NODES = 512
FD_STEP = 1e-5


def _check_fid(function_id: str) -> None:
    if function_id not in FUNCTION_IDS:
        raise DomainError(f"function_id must be 'f' or 'g', got {function_id!r}")


def _check_m(m: int, cap: int | None = None) -> None:
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"m must be a positive integer, got {m!r}")
    if cap is not None and m > cap:
        raise DomainError(f"m={m} exceeds the contour cap {cap}")


def integrand(function_id: str, m: int) -> Callable[[complex], complex]:
    _check_fid(function_id)
    _check_m(m)
    shift = 1.0 if function_id == "f" else -1.0

    def h(z: complex) -> complex:
        return cot_pi(z) / (z ** (2 * m) + shift)

    return h


# -- analytic residues -----------------------------------------------------


def residue_f_integer(n: int, m: int) -> complex:
    """Res(f, n) = 1 / (pi (n^(2m) + 1))."""
    _check_m(m)
    return complex(1.0 / (math.pi * float(n ** (2 * m) + 1)), 0.0)


def residue_f_root(k: int, m: int, sign: int = 1) -> complex:
    """Res(f, +/-a) = -a cot(pi a) / (2m) with a = exp(i pi (2k-1)/2m); same for both signs."""
    _check_m(m)
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    a = alpha_root(m, k)
    return -a * cot_pi(a) / (2 * m)


def residue_g_integer(n: int, m: int) -> complex:
    """Res(g, n) = 1 / (pi (n^(2m) - 1)) for n = 0, +/-2, +/-3, ..."""
    _check_m(m)
    if n in (1, -1):
        raise WrongPoleError(f"z = {n} is a double pole of g; use residue_g_double")
    return complex(1.0 / (math.pi * float(n ** (2 * m) - 1)), 0.0)


def residue_g_root(k: int, m: int) -> complex:
    """Res(g, b^k) = b^k cot(pi b^k) / (2m) with b = exp(i pi / m)."""
    _check_m(m)
    if k == m:
        raise WrongPoleError("b^m = -1 is a double pole of g; use residue_g_double")
    b = beta_root(m, k)
    return b * cot_pi(b) / (2 * m)


def residue_g_double(sign: int, m: int) -> complex:
    """Res(g, +/-1) = -(2m - 1) / (4 m pi)."""
    _check_m(m)
    if sign not in (1, -1):
        raise DomainError(f"sign must be +1 or -1, got {sign!r}")
    return complex(-(2 * m - 1) / (4 * m * math.pi), 0.0)


@dataclass(frozen=True)
class Pole:
    location: complex
    order: int
    residue: complex
    label: str


def _root_poles(function_id: str, m: int) -> list[Pole]:
    poles = []
    if function_id == "f":
        for k in range(1, m + 1):
            for sign in (1, -1):
                poles.append(
                    Pole(sign * alpha_root(m, k), 1, residue_f_root(k, m, sign), f"{'+' if sign > 0 else '-'}alpha^{2 * k - 1}")
                )
    else:
        for k in range(1, 2 * m):
            if k != m:
                poles.append(Pole(beta_root(m, k), 1, residue_g_root(k, m), f"beta^{k}"))
    return poles


def enclosed_poles(function_id: str, m: int, N: int) -> list[Pole]:
    """All poles inside C(N), integers ascending first, then the unit-circle roots."""
    _check_fid(function_id)
    _check_m(m)
    if not isinstance(N, int) or N < 1:
        raise DomainError(f"N must be a positive integer, got {N!r}")
    poles = []
    for n in range(-N, N + 1):
        if function_id == "f":
            poles.append(Pole(complex(n, 0), 1, residue_f_integer(n, m), f"n={n}"))
        elif n in (1, -1):
            poles.append(Pole(complex(n, 0), 2, residue_g_double(n, m), f"n={n}"))
        else:
            poles.append(Pole(complex(n, 0), 1, residue_g_integer(n, m), f"n={n}"))
    return poles + _root_poles(function_id, m)


# -- numeric residue oracles -----------------------------------------------


def _nearest_other_pole(function_id: str, m: int, a: complex) -> float:
    best = math.inf
    base = math.floor(a.real)
    for n in range(base - 2, base + 4):
        d = abs(a - n)
        if d > 1e-9:
            best = min(best, d)
    roots = [p.location for p in _root_poles(function_id, m)]
    if function_id == "g":
        roots += [1.0 + 0j, -1.0 + 0j]
    for r in roots:
        d = abs(a - r)
        if d > 1e-9:
            best = min(best, d)
    return best


def circle_residue(
    fun: Callable[[complex], complex], center: complex, radius: float, nodes: int = CIRCLE_NODES
) -> complex:
    """(1 / 2 pi i) times the contour integral of fun over a circle, trapezoid rule.

    For a function analytic in an annulus around the circle the trapezoid
    rule converges geometrically in the number of nodes.
    """
    acc = 0j
    for j in range(nodes):
        w = cmath.exp(2j * math.pi * j / nodes)
        acc += fun(center + radius * w) * w
    return acc * radius / nodes


def double_pole_residue_fd(sign: int, m: int, step: float = FD_STEP) -> complex:
    """d/dz [(z - a)^2 g(z)] at a = sign, by central difference."""
    g = integrand("g", m)
    a = float(sign)

    def h(z: complex) -> complex:
        return (z - a) ** 2 * g(z)

    return (h(complex(a + step, 0)) - h(complex(a - step, 0))) / (2 * step)


@dataclass(frozen=True)
class ResidueReport:
    pole: complex
    order: int
    analytic: complex
    numeric: complex
    abs_diff: float
    tolerance: float
    label: str = ""

    @property
    def passed(self) -> bool:
        return self.abs_diff <= self.tolerance


def check_residues(function_id: str, m: int, n_range: int = 3) -> list[ResidueReport]:
    """Compare every analytic residue with its numeric oracle.

    Integer poles |n| <= n_range and all unit-circle roots are covered.
    Simple poles use the small-circle trapezoid rule with radius
    min(0.25, half the distance to the nearest other pole); the double poles
    of g use the finite-difference derivative.
    """
    fun = integrand(function_id, m)
    reports = []
    for p in enclosed_poles(function_id, m, n_range):
        if p.order == 2:
            numeric = double_pole_residue_fd(int(p.location.real), m)
            tol = DOUBLE_RESIDUE_TOL
        else:
            radius = min(0.25, 0.5 * _nearest_other_pole(function_id, m, p.location))
            numeric = circle_residue(fun, p.location, radius)
            tol = SIMPLE_RESIDUE_TOL
        reports.append(
            ResidueReport(
                pole=p.location,
                order=p.order,
                analytic=p.residue,
                numeric=numeric,
                abs_diff=abs(numeric - p.residue),
                tolerance=tol,
                label=p.label,
            )
        )
    return reports


# -- contour quadrature ----------------------------------------------------

# Kronrod 15-point nodes on [0, 1] half-interval (symmetric), QUADPACK qk15.
_XGK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
)
_WGK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
)
# Gauss 7-point weights for the nodes _XGK[1], _XGK[3], _XGK[5], _XGK[7]
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
)


def gauss_kronrod_15(fun: Callable[[float], complex], a: float, b: float) -> tuple[complex, float]:
    """(K15 estimate, |K15 - G7|) for the integral of fun over [a, b]."""
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = fun(c)
    kron = _WGK[7] * fc
    gauss = _WG[3] * fc
    for j in range(7):
        dx = h * _XGK[j]
        s = fun(c - dx) + fun(c + dx)
        kron += _WGK[j] * s
        if j % 2 == 1:
            gauss += _WG[j // 2] * s
    return kron * h, abs((kron - gauss) * h)


def adaptive_quad(
    fun: Callable[[float], complex],
    a: float,
    b: float,
    tol: float = QUAD_TOL,
    max_depth: int = QUAD_MAX_DEPTH,
    side: str = "",
) -> complex:
    """Recursive bisection with a G7/K15 panel rule.

    A panel is accepted once its error estimate is within its length-share of
    ``tol``.  Panels are summed left to right regardless of refinement order.
    """
    length = b - a
    total = 0j
    stack = [(a, b, 0)]
    accepted: list[tuple[float, complex]] = []
    while stack:
        lo, hi, depth = stack.pop()
        val, err = gauss_kronrod_15(fun, lo, hi)
        if err <= tol * (hi - lo) / length:
            accepted.append((lo, val))
            continue
        if depth >= max_depth:
            raise QuadratureError(
                f"quadrature did not converge on side {side or '?'} near t in [{lo:g}, {hi:g}]",
                side=side,
            )
        mid = 0.5 * (lo + hi)
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    for _, val in sorted(accepted, key=lambda item: item[0]):
        total += val
    return total


@dataclass(frozen=True)
class ContourSpec:
    """The square C(N), as four counterclockwise sides C1 (right) .. C4 (bottom)."""

    N: int
    segments: tuple[tuple[str, complex, complex], ...] = field(init=False)

    def __post_init__(self) -> None:
        if not isinstance(self.N, int) or self.N < 1:
            raise DomainError(f"N must be a positive integer, got {self.N!r}")
        h = self.N + 0.5
        corners = (complex(h, -h), complex(h, h), complex(-h, h), complex(-h, -h))
        segs = tuple(
            (f"C{i + 1}", corners[i], corners[(i + 1) % 4]) for i in range(4)
        )
        object.__setattr__(self, "segments", segs)

    @property
    def half_width(self) -> float:
        return self.N + 0.5

    def length(self) -> float:
        return 8.0 * self.half_width

    def sample(self, t: float) -> complex:
        """Point at arc-length fraction t in [0, 1) along the oriented contour."""
        t = t % 1.0
        idx = min(int(t * 4), 3)
        _, z0, z1 = self.segments[idx]
        return z0 + (t * 4 - idx) * (z1 - z0)


def _check_contour_args(function_id: str, m: int, N: int) -> None:
    _check_fid(function_id)
    _check_m(m, M_MAX_CONTOUR)
    if not isinstance(N, int) or not 1 <= N <= N_MAX_CONTOUR:
        raise DomainError(f"N must be an integer in 1..{N_MAX_CONTOUR}, got {N!r}")


def contour_integral(function_id: str, m: int, N: int, tol: float = QUAD_TOL) -> complex:
    """Integral of f or g over C(N), counterclockwise, side by side."""
    _check_contour_args(function_id, m, N)
    fun = integrand(function_id, m)
    total = 0j
    for name, z0, z1 in ContourSpec(N).segments:
        dz = z1 - z0

        def along(t: float, z0=z0, dz=dz) -> complex:
            return fun(z0 + t * dz) * dz

        total += adaptive_quad(along, 0.0, 1.0, tol=tol, side=name)
    return total


def lemma_bound(m: int, N: int) -> float:
    """coth(3 pi / 2) / ((N + 1/2)^(2m) - 1) * 8 (N + 1/2)."""
    _check_m(m)
    if not isinstance(N, int) or N < 1:
        raise DomainError(f"N must be a positive integer, got {N!r}")
    h = N + 0.5
    return coth_real(1.5 * math.pi) / (h ** (2 * m) - 1.0) * 8.0 * h


@dataclass(frozen=True)
class ContourReport:
    function_id: str
    m: int
    N: int
    integral: complex
    residue_sum_times_2pi_i: complex
    lemma_bound: float
    abs_diff: float
    passed: bool

    def to_dict(self) -> dict:
        return {
            "function_id": self.function_id,
            "m": self.m,
            "N": self.N,
            "integral": {"re": self.integral.real, "im": self.integral.imag},
            "residue_sum_times_2pi_i": {
                "re": self.residue_sum_times_2pi_i.real,
                "im": self.residue_sum_times_2pi_i.imag,
            },
            "lemma_bound": self.lemma_bound,
            "abs_diff": self.abs_diff,
            "passed": self.passed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ContourReport":
        return cls(
            function_id=str(d["function_id"]),
            m=int(d["m"]),
            N=int(d["N"]),
            integral=complex(d["integral"]["re"], d["integral"]["im"]),
            residue_sum_times_2pi_i=complex(
                d["residue_sum_times_2pi_i"]["re"], d["residue_sum_times_2pi_i"]["im"]
            ),
            lemma_bound=float(d["lemma_bound"]),
            abs_diff=float(d["abs_diff"]),
            passed=bool(d["passed"]),
        )


def verify(function_id: str, m: int, N: int) -> ContourReport:
    """Residue theorem on C(N): numeric integral vs 2 pi i times the enclosed residues."""
    _check_contour_args(function_id, m, N)
    integral = contour_integral(function_id, m, N)
    res_sum = 0j
    for p in enclosed_poles(function_id, m, N):
        res_sum += p.residue
    rhs = 2j * math.pi * res_sum
    bound = lemma_bound(m, N)
    diff = abs(integral - rhs)
    passed = diff <= RESIDUE_THEOREM_TOL and abs(integral) <= bound * (1 + BOUND_SLACK)
    return ContourReport(
        function_id=function_id,
        m=m,
        N=N,
        integral=integral,
        residue_sum_times_2pi_i=rhs,
        lemma_bound=bound,
        abs_diff=diff,
        passed=passed,
    )


# -- limits N -> infinity --------------------------------------------------


def reconstruct_zeta_plus_one(m: int, N: int) -> tuple[float, float, float]:
    """Rebuild zeta_{+1}(2m) from the residues of f.

    Returns (partial, limit, bound).  ``partial`` is (pi/2) times the integer
    residues with 1 <= |n| <= N, i.e. sum_{n<=N} 1/(n^(2m)+1).  ``limit``
    solves "sum of all residues = 0" for the series.  Since the enclosed
    residues equal I_N / (2 pi i), partial and limit differ by |I_N| / 4,
    which ``bound`` = lemma_bound * pi/2 dominates.
    """
    _check_m(m)
    integer_part = sum(
        (residue_f_integer(n, m) for n in range(-N, N + 1) if n != 0), 0j
    )
    root_part = sum((p.residue for p in _root_poles("f", m)), 0j)
    partial = (math.pi / 2) * integer_part.real
    limit = -(math.pi / 2) * (residue_f_integer(0, m) + root_part).real
    return partial, limit, lemma_bound(m, N) * math.pi / 2


def reconstruct_zeta_minus_one(m: int, N: int) -> tuple[float, float, float]:
    """As reconstruct_zeta_plus_one, for g; the double poles at +/-1 join the constant part."""
    _check_m(m)
    integer_part = sum(
        (residue_g_integer(n, m) for n in range(-N, N + 1) if abs(n) >= 2), 0j
    )
    fixed = residue_g_integer(0, m) + residue_g_double(1, m) + residue_g_double(-1, m)
    root_part = sum((p.residue for p in _root_poles("g", m)), 0j)
    partial = (math.pi / 2) * integer_part.real
    limit = -(math.pi / 2) * (fixed + root_part).real
    return partial, limit, lemma_bound(m, N) * math.pi / 2


def theorem2_balance(m: int, zeta_minus_value: float, printed: bool = False) -> float:
    """Sum of all residues of g written in terms of zeta_{-1}(2m); zero when consistent.

    printed=False:  -1/pi - (2m-1)/(2m pi) + (2/pi) z + (1/2m) S
    printed=True:   -1/pi - (2m-1) pi/(2m) + (2/pi) z + (pi/2m) S
    with S = sum_{k != m} b^k cot(pi b^k).  The first is the residue sum;
    the second reproduces the constants as typeset in the source derivation.
    """
    _check_m(m)
    S = sum((s for _, _, s in minus_root_pairs(m)), 0j).real
    if printed:
        return -1 / math.pi - (2 * m - 1) * math.pi / (2 * m) + 2 / math.pi * zeta_minus_value + math.pi / (2 * m) * S
    return -1 / math.pi - (2 * m - 1) / (2 * m * math.pi) + 2 / math.pi * zeta_minus_value + S / (2 * m)

