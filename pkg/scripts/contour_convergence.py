#!/usr/bin/env python3
"""How fast the square-contour integrals vanish compared with the lemma bound.

For each m and N, prints |I_N|, the bound coth(3 pi/2) 8 (N+1/2) / ((N+1/2)^(2m) - 1),
and the residue-theorem mismatch.  Optional CSV output.
"""

from __future__ import annotations

import argparse
import csv
import sys
from dataclasses import dataclass, field

from zetaone.residue_verifier import verify


@dataclass
class Config:
    functions: list[str] = field(default_factory=lambda: ["f", "g"])
    ms: list[int] = field(default_factory=lambda: [1, 2, 3])
    n_max: int = 20
    csv_path: str | None = None


def main() -> None:
    ap = argparse.ArgumentParser(description="contour integral vs lemma bound")
    ap.add_argument("--functions", nargs="+", default=["f", "g"], choices=["f", "g"])
    ap.add_argument("--ms", nargs="+", type=int, default=[1, 2, 3])
    ap.add_argument("--n-max", type=int, default=20)
    ap.add_argument("--csv", dest="csv_path")
    cfg = Config(**vars(ap.parse_args()))

    rows = []
    for fid in cfg.functions:
        for m in cfg.ms:
            for N in range(1, cfg.n_max + 1):
                r = verify(fid, m, N)
                rows.append({
                    "fn": fid, "m": m, "N": N,
                    "abs_integral": abs(r.integral),
                    "lemma_bound": r.lemma_bound,
                    "ratio": abs(r.integral) / r.lemma_bound,
                    "residue_mismatch": r.abs_diff,
                    "passed": r.passed,
                })
    print(f"{'fn':>2} {'m':>2} {'N':>3} {'|I_N|':>12} {'bound':>12} {'ratio':>7} {'mismatch':>10} ok")
    for r in rows:
        print(
            f"{r['fn']:>2} {r['m']:>2} {r['N']:>3} {r['abs_integral']:>12.4e} {r['lemma_bound']:>12.4e}"
            f" {r['ratio']:>7.3f} {r['residue_mismatch']:>10.1e} {r['passed']}"
        )
    if cfg.csv_path:
        with open(cfg.csv_path, "w", newline="") as fh:
            w = csv.DictWriter(fh, fieldnames=list(rows[0]))
            w.writeheader()
            w.writerows(rows)
    sys.exit(0 if all(r["passed"] for r in rows) else 1)


if __name__ == "__main__":
    main()
