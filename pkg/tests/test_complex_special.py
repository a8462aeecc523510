import math

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from zetaone.complex_special import alpha_root, beta_root, cot_pi, cot_rect, coth_real, tanh_real
from zetaone.errors import DomainError, PoleError

COTH_PI = 1.00374187319732128820  # mpmath, 30 digits
COTH_3PI_2 = 1.00016141206101606322


def _mp_cot(z: complex) -> complex:
    with mpmath.workdps(40):
        w = mpmath.mpc(z.real, z.imag)
        return complex(mpmath.cos(w) / mpmath.sin(w))


def test_cot_rect_basic():
    assert abs(cot_rect(math.pi / 2, 0.0)) < 1e-16
    v = cot_rect(0.0, math.pi)
    assert v.real == 0.0
    assert v.imag == pytest.approx(-COTH_PI, rel=1e-15)


@pytest.mark.parametrize(
    "z,expected",
    [
        (1 + 2j, 0.0327977555337525940627645465766 - 0.98432922645819102947188818169j),
        (0.3 - 0.7j, 0.425964316357461101080604520056 + 1.43659842364848489879576176588j),
    ],
)
def test_cot_rect_frozen(z, expected):
    got = cot_rect(z.real, z.imag)
    assert abs(got - expected) <= 1e-13 * abs(expected)


@given(
    st.floats(min_value=-10, max_value=10, allow_nan=False),
    st.floats(min_value=-15, max_value=15, allow_nan=False),
)
def test_cot_rect_matches_extended_precision(x, y):
    k = round(x / math.pi)
    assume(math.hypot(x - k * math.pi, y) > 1e-3)
    ref = _mp_cot(complex(x, y))
    assert abs(cot_rect(x, y) - ref) <= 1e-13 * abs(ref) + 1e-300


def test_cot_saturation():
    assert cot_rect(0.3, 25.0) == -1j
    assert cot_rect(0.3, -25.0) == 1j
    assert abs(cot_rect(0.3, 19.9) - (-1j)) < 1e-15


def test_poles():
    with pytest.raises(PoleError) as exc:
        cot_rect(math.pi, 0.0)
    assert exc.value.pole == pytest.approx(math.pi)
    with pytest.raises(PoleError) as exc:
        cot_pi(3 + 1e-14j)
    assert exc.value.pole == 3
    with pytest.raises(PoleError):
        cot_pi(-2.0)


def test_cot_pi_examples():
    assert abs(cot_pi(0.5)) < 1e-16
    # i cot(pi i) = coth(pi)
    assert (1j * cot_pi(1j)).real == pytest.approx(COTH_PI, rel=1e-15)
    assert abs(cot_pi(1.5 + 1.5j)) <= COTH_3PI_2


finite = st.floats(min_value=-8, max_value=8, allow_nan=False)


@given(finite, finite)
def test_cot_pi_symmetries(x, y):
    z = complex(x, y)
    assume(abs(z - round(x)) > 1e-3)
    c = cot_pi(z)
    assert abs(cot_pi(z.conjugate()) - c.conjugate()) <= 1e-12 * max(1.0, abs(c))
    assert abs(cot_pi(-z) + c) <= 1e-12 * max(1.0, abs(c))


def test_partial_fraction_at_half():
    # cot(pi z) = 1/(pi z) + (1/pi) sum 2z/(z^2 - n^2) at z = 1/2
    z = 0.5
    s = 1 / (math.pi * z) + sum(2 * z / (z * z - n * n) for n in range(1, 10**5 + 1)) / math.pi
    assert abs(s - cot_pi(z)) < 1e-4


def test_hyperbolic():
    assert coth_real(1.5 * math.pi) == pytest.approx(COTH_3PI_2, rel=1e-15)
    assert coth_real(math.pi) == pytest.approx(COTH_PI, rel=1e-15)
    assert tanh_real(0.0) == 0.0
    with pytest.raises(DomainError):
        coth_real(0.0)
    ts = [0.1 * j for j in range(1, 200)]
    assert all(coth_real(a) >= coth_real(b) for a, b in zip(ts, ts[1:]))


def test_root_examples():
    assert abs(alpha_root(2, 1) - (1 + 1j) / math.sqrt(2)) < 1e-15
    assert abs(alpha_root(3, 1) - (math.sqrt(3) + 1j) / 2) < 1e-15
    assert abs(alpha_root(1, 1) - 1j) < 1e-15
    assert abs(beta_root(2, 1) - 1j) < 1e-15
    assert abs(beta_root(3, 2) - complex(-0.5, math.sqrt(3) / 2)) < 1e-15
    assert abs(beta_root(3, 4) - beta_root(3, 2).conjugate()) < 1e-15


def test_root_domain():
    for bad in [(2, 0), (2, 3)]:
        with pytest.raises(DomainError):
            alpha_root(*bad)
    for bad in [(2, 2), (2, 0), (2, 4)]:
        with pytest.raises(DomainError):
            beta_root(*bad)


@given(st.integers(min_value=1, max_value=50), st.data())
def test_root_properties(m, data):
    k = data.draw(st.integers(min_value=1, max_value=m))
    a = alpha_root(m, k)
    assert abs(abs(a) - 1) < 1e-15
    assert abs(a ** (2 * m) + 1) < 1e-12
    assert abs(alpha_root(m, m + 1 - k) + a.conjugate()) < 1e-12
    if m > 1:
        j = data.draw(st.integers(min_value=1, max_value=2 * m - 1).filter(lambda j: j != m))
        b = beta_root(m, j)
        assert abs(b ** (2 * m) - 1) < 1e-12
        assert abs(b - 1) > 1e-3 and abs(b + 1) > 1e-3
        assert abs(beta_root(m, 2 * m - j) - b.conjugate()) < 1e-12
