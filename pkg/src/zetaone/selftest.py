"""The acceptance grid as a runnable self-check (``zetaone selftest``)."""

from __future__ import annotations

import math
import time
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable

from .bernoulli_zeta import bernoulli, zeta_even_exact
from .closed_forms import (
    minus_root_pairs,
    plus_root_pairs,
    zeta_minus_one_even,
    zeta_minus_one_real,
    zeta_plus_one_even,
    zeta_plus_one_real,
)
from .complex_special import cot_pi, coth_real
from .residue_verifier import ContourSpec, check_residues, verify
from .series_engine import (
    euler_goldbach_partial,
    even_sum_partial,
    shallit_zikan_partial,
    zeta_minus_one_series,
    zeta_mod_sum_partial,
    zeta_plus_one_series,
)

TABLE_BERNOULLI = {
    0: Fraction(1), 1: Fraction(-1, 2), 2: Fraction(1, 6), 4: Fraction(-1, 30),
    6: Fraction(1, 42), 8: Fraction(-1, 30), 10: Fraction(5, 66), 12: Fraction(-691, 2730),
    14: Fraction(7, 6), 16: Fraction(-3617, 510), 18: Fraction(43867, 798),
    20: Fraction(-174611, 330),
}
TABLE_ZETA = {
    1: Fraction(1, 6), 2: Fraction(1, 90), 3: Fraction(1, 945), 4: Fraction(1, 9450),
    5: Fraction(1, 93555), 6: Fraction(691, 638512875),
}


@dataclass
class CheckResult:
    criterion: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def to_dict(self) -> dict:
        return asdict(self)


def _c1() -> tuple[bool, str]:
    bad = [n for n, v in TABLE_BERNOULLI.items() if bernoulli(n) != v]
    bad += [f"zeta({2 * k})" for k, v in TABLE_ZETA.items() if zeta_even_exact(k).coefficient != v]
    return not bad, f"mismatches: {bad}" if bad else "12 Bernoulli + 6 zeta coefficients exact"


def _c2() -> tuple[bool, str]:
    c = zeta_minus_one_even(1).value
    s = zeta_minus_one_series(2, 1e-10)
    ok = abs(c - 0.75) <= 1e-15 and abs(s.value - 0.75) <= 1e-10
    return ok, f"closed={c!r} series={s.value!r}"


def _c3() -> tuple[bool, str]:
    c = zeta_plus_one_even(1).value
    s = zeta_plus_one_series(2, 1e-10).value
    ref = -0.5 + math.pi / 2 * coth_real(math.pi)
    ok = abs(c - s) <= 1e-9 and abs(c - ref) <= 1e-9
    return ok, f"|closed-series|={abs(c - s):.3e}"


def _three_way(closed: float, real: float, series: float) -> float:
    return max(abs(closed - real), abs(closed - series), abs(real - series))


def _c4() -> tuple[bool, str]:
    worst = max(
        _three_way(zeta_plus_one_even(m).value, zeta_plus_one_real(m).value,
                   zeta_plus_one_series(2 * m, 1e-10).value)
        for m in (2, 3)
    )
    return worst <= 1e-9, f"max pairwise diff {worst:.3e}"


def _c5() -> tuple[bool, str]:
    worst = max(
        _three_way(zeta_minus_one_even(m).value, zeta_minus_one_real(m).value,
                   zeta_minus_one_series(2 * m, 1e-10).value)
        for m in (2, 3)
    )
    return worst <= 1e-9, f"max pairwise diff {worst:.3e}"


def _c6() -> tuple[bool, str]:
    worst = 0.0
    imag = 0.0
    for m in range(1, 7):
        for closed, series in (
            (zeta_plus_one_even(m), zeta_plus_one_series(2 * m, 1e-10)),
            (zeta_minus_one_even(m), zeta_minus_one_series(2 * m, 1e-10)),
        ):
            worst = max(worst, abs(closed.value - series.value))
            imag = max(imag, closed.residual_imag)
    return worst <= 1e-9 and imag <= 1e-10, f"max diff {worst:.3e}, max residual_imag {imag:.3e}"


def _c7() -> tuple[bool, str]:
    failed = []
    for fid in ("f", "g"):
        for m in (1, 2, 3):
            for N in (2, 5, 10):
                if not verify(fid, m, N).passed:
                    failed.append((fid, m, N))
    return not failed, f"failed: {failed}" if failed else "18 contours pass"


def _c8() -> tuple[bool, str]:
    failed = []
    count = 0
    for fid in ("f", "g"):
        for m in range(1, 7):
            for r in check_residues(fid, m):
                count += 1
                if not r.passed:
                    failed.append((fid, m, r.label, r.abs_diff))
    return not failed, f"failed: {failed}" if failed else f"{count} residues match"


def _c9() -> tuple[bool, str]:
    sz = shallit_zikan_partial(60)
    ev = even_sum_partial(30)
    z4 = zeta_mod_sum_partial(2, 30)
    eg = euler_goldbach_partial(10**7)
    ok = (
        sz.residual <= 1e-12
        and ev.residual <= 1e-12
        and z4.residual <= 1e-10
        and eg.residual <= 5e-4
        and eg.residual <= eg.tail_bound
    )
    return ok, (
        f"SZ {sz.residual:.1e}, 3/4 {ev.residual:.1e}, zeta4k {z4.residual:.1e}, "
        f"EG {eg.residual:.2e} (tail {eg.tail_bound:.2e})"
    )


def _c10() -> tuple[bool, str]:
    pair_imag = max(
        abs(s.imag) / (2 * m)
        for m in range(1, 11)
        for pairs in (plus_root_pairs(m), minus_root_pairs(m))
        for _, _, s in pairs
    )
    limit = coth_real(1.5 * math.pi) * (1 + 1e-10)
    worst_cot = 0.0
    for N in (1, 2, 5, 10):
        spec = ContourSpec(N)
        for j in range(1000):
            worst_cot = max(worst_cot, abs(cot_pi(spec.sample((j + 0.5) / 1000))))
    drift_ok = True
    for s in (2, 3, 4, 6):
        a = zeta_plus_one_series(s, 1e-6)
        b = zeta_plus_one_series(s, 1e-8)
        drift_ok &= abs(a.value - b.value) <= a.error_bound
        a = zeta_minus_one_series(s, 1e-6)
        b = zeta_minus_one_series(s, 1e-8)
        drift_ok &= abs(a.value - b.value) <= a.error_bound
    plus = [zeta_plus_one_even(m).value for m in range(1, 11)]
    minus = [zeta_minus_one_even(m).value for m in range(1, 11)]
    mono = all(x > y > 0 for x, y in zip(plus, plus[1:])) and all(
        x > y > 0 for x, y in zip(minus, minus[1:])
    )
    ok = pair_imag <= 1e-12 and worst_cot <= limit and drift_ok and mono
    return ok, (
        f"pair imag {pair_imag:.1e}, max|cot| {worst_cot:.6f}, drift {'ok' if drift_ok else 'FAIL'}, "
        f"monotone {'ok' if mono else 'FAIL'}"
    )


CRITERIA: list[tuple[int, str, Callable[[], tuple[bool, str]]]] = [
    (1, "exact table pins", _c1),
    (2, "zeta_-1(2) = 3/4", _c2),
    (3, "zeta_+1(2) coth form", _c3),
    (4, "zeta_+1(4), zeta_+1(6) three-way", _c4),
    (5, "zeta_-1(4), zeta_-1(6) three-way", _c5),
    (6, "closed vs series m<=6", _c6),
    (7, "residue theorem grid", _c7),
    (8, "residue formula oracles", _c8),
    (9, "summation identities", _c9),
    (10, "property suites", _c10),
]


def run() -> list[CheckResult]:
    results = []
    for num, name, fn in CRITERIA:
        t0 = time.perf_counter()
        passed, detail = fn()
        results.append(CheckResult(num, name, bool(passed), detail, time.perf_counter() - t0))
    return results
