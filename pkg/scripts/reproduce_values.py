#!/usr/bin/env python3
"""Print the even zeta tables and zeta_{+1}, zeta_{-1} at s = 2..2*m_max.

    python scripts/reproduce_values.py --m-max 8 --tol 1e-11 --json values.json
"""

from __future__ import annotations

import argparse
import json
from dataclasses import asdict, dataclass

from zetaone.bernoulli_zeta import bernoulli, zeta_even_exact
from zetaone.closed_forms import (
    zeta_minus_one_even,
    zeta_minus_one_real,
    zeta_plus_one_even,
    zeta_plus_one_real,
)
from zetaone.series_engine import zeta_minus_one_series, zeta_plus_one_series


@dataclass
class Config:
    m_max: int = 6
    tol: float = 1e-10
    json_path: str | None = None


def run(cfg: Config) -> dict:
    bern = {n: str(bernoulli(n)) for n in [0, 1] + list(range(2, 21, 2))}
    zeta = {2 * k: f"({zeta_even_exact(k).coefficient}) pi^{2 * k}" for k in range(1, 7)}
    rows = []
    for m in range(1, cfg.m_max + 1):
        row = {"s": 2 * m}
        for name, closed, real, series in (
            ("zp1", zeta_plus_one_even, zeta_plus_one_real, zeta_plus_one_series),
            ("zm1", zeta_minus_one_even, zeta_minus_one_real, zeta_minus_one_series),
        ):
            c = closed(m)
            sr = series(2 * m, cfg.tol)
            row[f"{name}_closed"] = c.value
            row[f"{name}_real"] = real(m).value if m <= 3 else None
            row[f"{name}_series"] = sr.value
            row[f"{name}_series_bound"] = sr.error_bound
            row[f"{name}_residual_imag"] = c.residual_imag
        rows.append(row)
    return {"config": asdict(cfg), "bernoulli": bern, "zeta_even": zeta, "rows": rows}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--m-max", type=int, default=Config.m_max)
    ap.add_argument("--tol", type=float, default=Config.tol)
    ap.add_argument("--json", dest="json_path")
    cfg = Config(**vars(ap.parse_args()))
    out = run(cfg)

    print("signed Bernoulli numbers")
    for n, v in out["bernoulli"].items():
        print(f"  B_{n:<2} = {v}")
    print("even zeta values")
    for s, v in out["zeta_even"].items():
        print(f"  zeta({s:>2}) = {v}")
    print(f"\n{'s':>3} {'zeta_+1 closed':>20} {'|closed-series|':>16} {'zeta_-1 closed':>20} {'|closed-series|':>16}")
    for r in out["rows"]:
        print(
            f"{r['s']:>3} {r['zp1_closed']:>20.15f} {abs(r['zp1_closed'] - r['zp1_series']):>16.2e}"
            f" {r['zm1_closed']:>20.15f} {abs(r['zm1_closed'] - r['zm1_series']):>16.2e}"
        )
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump(out, fh, indent=2)


if __name__ == "__main__":
    main()
