import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from zetaone.closed_forms import zeta_minus_one_even, zeta_plus_one_even
from zetaone.errors import CapacityError, DomainError
from zetaone.series_engine import (
    IdentityReport,
    euler_goldbach_exact,
    euler_goldbach_partial,
    even_sum_partial,
    iroot,
    is_perfect_power,
    perfect_powers_upto,
    shallit_zikan_partial,
    zeta_int_series,
    zeta_minus_one_series,
    zeta_mod_sum_partial,
    zeta_plus_one_series,
)

SERIES = {
    "zeta": (zeta_int_series, lambda s: mpmath.zeta(s)),
    "plus": (zeta_plus_one_series, lambda s: mpmath.nsum(lambda n: 1 / (n**s + 1), [1, mpmath.inf])),
    "minus": (zeta_minus_one_series, lambda s: mpmath.nsum(lambda n: 1 / (n**s - 1), [2, mpmath.inf])),
}


@pytest.mark.parametrize("kind", sorted(SERIES))
@pytest.mark.parametrize("s", [2, 3, 4, 5, 8])
@pytest.mark.parametrize("tol", [1e-4, 1e-8, 1e-11])
def test_bracket_contains_true_value(kind, s, tol):
    fn, ref = SERIES[kind]
    r = fn(s, tol)
    with mpmath.workdps(30):
        true = float(ref(s))
    assert r.method == "series"
    assert r.error_bound <= tol
    assert r.value - 1e-15 <= true <= r.value + r.error_bound + 1e-15


def test_zeta_examples():
    assert abs(zeta_int_series(2, 1e-6).value - 1.644934) < 2e-6
    assert zeta_int_series(2, 1e-6).error_bound <= 1e-6
    assert abs(zeta_int_series(3, 1e-6).value - 1.202056) < 2e-6


@pytest.mark.parametrize("s", [20, 40, 60])
def test_dominant_terms(s):
    v = zeta_int_series(s, 1e-14).value
    assert -(2.0**-52) <= v - 1 - 2.0**-s <= 2 * 3.0**-s
    p = zeta_plus_one_series(s, 1e-14).value
    assert abs(p - 0.5 - 1 / (2.0**s + 1)) <= 2 * 3.0**-s + 2.0**-53


def test_named_values():
    pi = math.pi
    assert abs(zeta_plus_one_series(2, 1e-8).value - (-0.5 + pi / 2 / math.tanh(pi))) <= 1e-8
    assert abs(zeta_minus_one_series(2, 1e-10).value - 0.75) <= 1e-10
    assert abs(zeta_minus_one_series(4, 1e-10).value - (7 / 8 - pi / 4 / math.tanh(pi))) <= 1e-9
    t = math.sqrt(3) * pi
    assert abs(zeta_minus_one_series(6, 1e-10).value - (11 / 12 - math.sqrt(3) / 6 * pi * math.tanh(t / 2))) <= 1e-9


@pytest.mark.parametrize("m", range(1, 7))
def test_oracle_equivalence(m):
    assert abs(zeta_plus_one_series(2 * m, 1e-10).value - zeta_plus_one_even(m).value) <= 1e-9
    assert abs(zeta_minus_one_series(2 * m, 1e-10).value - zeta_minus_one_even(m).value) <= 1e-9


@settings(max_examples=30, deadline=None)
@given(
    st.sampled_from(sorted(SERIES)),
    st.integers(min_value=2, max_value=12),
    st.sampled_from([1e-3, 1e-5, 1e-6, 1e-7]),
)
def test_tail_bound_soundness(kind, s, tol):
    fn, _ = SERIES[kind]
    loose = fn(s, tol)
    tight = fn(s, tol / 100)
    assert tight.terms_used >= loose.terms_used
    assert abs(loose.value - tight.value) <= loose.error_bound


def test_determinism():
    a = zeta_plus_one_series(2, 1e-11)
    b = zeta_plus_one_series(2, 1e-11)
    assert a == b
    assert a.value.hex() == b.value.hex()


def test_preconditions():
    with pytest.raises(DomainError):
        zeta_int_series(1, 1e-6)
    with pytest.raises(DomainError):
        zeta_plus_one_series(2, 1e-15)
    with pytest.raises(DomainError):
        zeta_minus_one_series(2.0, 1e-6)


def test_term_cap(monkeypatch):
    monkeypatch.setenv("ZETAONE_TERM_CAP", "1000")
    with pytest.raises(CapacityError):
        zeta_plus_one_series(2, 1e-10)
    assert zeta_plus_one_series(4, 1e-10).terms_used <= 1000
    monkeypatch.setenv("ZETAONE_TERM_CAP", "junk")
    with pytest.raises(DomainError):
        zeta_int_series(2, 1e-6)


# -- identities ------------------------------------------------------------


def test_shallit_zikan_small():
    assert abs(shallit_zikan_partial(2).partial_sum - 0.6449340668482264) < 1e-14
    assert abs(shallit_zikan_partial(3).partial_sum - (0.6449340668482264 + 0.2020569031595943)) < 1e-14


@pytest.mark.parametrize("K", [2, 3, 5, 10, 30, 60])
def test_shallit_zikan_tail_derivation(K):
    with mpmath.workdps(40):
        true_tail = mpmath.nsum(lambda n: n**-K / (n - 1), [2, mpmath.inf])
    assert float(true_tail) <= 2.0**-K * (1 + 2 / (K - 1))


def test_shallit_zikan_60():
    r = shallit_zikan_partial(60)
    assert r.identity_id == "shallit_zikan"
    assert r.residual <= 1e-12
    assert r.holds


def test_even_sum():
    assert abs(even_sum_partial(1).partial_sum - 0.6449340668482264) < 1e-15
    r = even_sum_partial(30)
    assert r.target == 0.75
    assert r.residual <= 1e-12
    assert r.holds
    assert even_sum_partial(100).holds


@pytest.mark.parametrize("m", [1, 2, 3])
def test_zeta_mod_sum(m):
    sums = [zeta_mod_sum_partial(m, K) for K in range(1, 16)]
    assert all(a.partial_sum <= b.partial_sum for a, b in zip(sums, sums[1:]))
    assert all(r.partial_sum <= r.target + r.tail_bound for r in sums)
    assert sums[-1].residual <= sums[-1].tail_bound
    assert sums[-1].target == zeta_minus_one_even(m).value


def test_zeta4k():
    r = zeta_mod_sum_partial(2, 30)
    assert r.identity_id == "zeta4k_sum"
    assert r.residual <= 1e-10
    assert abs(zeta_mod_sum_partial(1, 40).partial_sum - 0.75) <= 1e-12


def test_identity_report_roundtrip():
    r = zeta_mod_sum_partial(3, 5)
    assert IdentityReport.from_dict(r.to_dict()) == r


# -- perfect powers --------------------------------------------------------


def _brute_powers(P):
    out = set()
    for n in range(2, P + 1):
        p = n * n
        while p <= P:
            out.add(p)
            p *= n
    return sorted(out)


def test_perfect_power_examples():
    assert perfect_powers_upto(36) == [4, 8, 9, 16, 25, 27, 32, 36]
    assert perfect_powers_upto(4) == [4]
    assert perfect_powers_upto(100).count(64) == 1


@given(st.integers(min_value=4, max_value=5000))
def test_perfect_powers_brute(P):
    got = perfect_powers_upto(P)
    assert got == _brute_powers(P)
    assert all(is_perfect_power(p) for p in got)


def test_perfect_powers_large_no_duplicates():
    got = perfect_powers_upto(10**9)
    assert len(got) == len(set(got))
    assert got == sorted(got)
    assert all(is_perfect_power(p) for p in got[-200:])


@given(st.integers(min_value=0, max_value=10**30), st.integers(min_value=1, max_value=40))
def test_iroot(x, m):
    r = iroot(x, m)
    assert r**m <= x < (r + 1) ** m


def test_perfect_power_caps():
    with pytest.raises(DomainError):
        perfect_powers_upto(3)
    with pytest.raises(CapacityError):
        perfect_powers_upto(10**12 + 1)


def test_euler_goldbach_36():
    expected = sum(Fraction(1, d) for d in (3, 7, 8, 15, 24, 26, 31, 35))
    assert euler_goldbach_exact(36) == expected
    assert abs(euler_goldbach_partial(36).partial_sum - float(expected)) < 1e-15


@pytest.mark.parametrize("P", [100, 10**4, 10**6, 10**7])
def test_euler_goldbach_tail(P):
    r = euler_goldbach_partial(P)
    assert r.partial_sum < 1
    assert r.residual <= r.tail_bound
    # the bound is dominated by the squares: roughly 1/sqrt(P)
    assert r.tail_bound <= 3 / math.sqrt(P)


def test_euler_goldbach_desk_scale():
    r = euler_goldbach_partial(10**7)
    assert r.residual <= 5e-4
