"""Command-line front end.

    zetaone eval --fn zp1 --s 4 --method closed
    zetaone table --smin 2 --smax 12 --format csv
    zetaone identity --id euler_goldbach --limit 10000000
    zetaone verify --fn g --m 2 --N 5 --format json
    zetaone bernoulli --range 0 20
    zetaone selftest

Exit status: 0 on success, 1 on usage/validation/domain errors, 2 on
numeric or capacity errors (and on a failing selftest).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .bernoulli_zeta import bernoulli, zeta_even
from .closed_forms import (
    EvalResult,
    zeta_minus_one_even,
    zeta_minus_one_real,
    zeta_plus_one_even,
    zeta_plus_one_real,
)
from .errors import DomainError, NumericError, UnsupportedError
from .residue_verifier import verify
from .series_engine import (
    IDENTITY_IDS,
    euler_goldbach_partial,
    even_sum_partial,
    shallit_zikan_partial,
    zeta_int_series,
    zeta_minus_one_series,
    zeta_mod_sum_partial,
    zeta_plus_one_series,
)

SCHEMA_VERSION = "1"
FORMATS = ("text", "json", "csv")
CSV_COMMANDS = ("table", "bernoulli")


class UsageError(DomainError):
    pass


@dataclass
class RunConfig:
    command: str
    parameters: dict[str, Any] = field(default_factory=dict)
    output_format: str = "text"
    output_path: str | None = None


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits 2 by default
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="zetaone", description="zeta-one functions at even integers")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=FORMATS, default="text", dest="output_format")
        p.add_argument("--out", default=None, dest="output_path", help="write report here instead of stdout")

    p = sub.add_parser("eval", help="evaluate zeta, zeta_+1 or zeta_-1 at s")
    p.add_argument("--fn", choices=("zeta", "zp1", "zm1"), required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--method", choices=("closed", "real", "series"), default="closed")
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)

    p = sub.add_parser("table", help="closed form vs series for a range of even s")
    p.add_argument("--smin", type=int, default=2)
    p.add_argument("--smax", type=int, default=12)
    p.add_argument("--tol", type=float, default=1e-10)
    common(p)

    p = sub.add_parser("identity", help="partial sums of the classical identities")
    p.add_argument("--id", choices=IDENTITY_IDS, required=True, dest="identity_id")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--m", type=int, default=2)
    common(p)

    p = sub.add_parser("verify", help="residue theorem check on the square contour C(N)")
    p.add_argument("--fn", choices=("f", "g"), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    common(p)

    p = sub.add_parser("bernoulli", help="exact signed Bernoulli numbers")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--range", type=int, nargs=2, metavar=("A", "B"))
    common(p)

    p = sub.add_parser("selftest", help="run the acceptance grid")
    common(p)
    return parser


def parse_config(argv: list[str] | None = None) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    command = ns.pop("command")
    if command is None:
        raise UsageError("no command given")
    fmt = ns.pop("output_format")
    out = ns.pop("output_path")
    if fmt == "csv" and command not in CSV_COMMANDS:
        raise UsageError(f"--format csv is only available for {', '.join(CSV_COMMANDS)}")
    return RunConfig(command=command, parameters=ns, output_format=fmt, output_path=out)


# -- command bodies --------------------------------------------------------


def _even_m(s: int) -> int:
    if s < 2 or s % 2:
        raise DomainError(f"closed and real forms need an even s >= 2, got s={s}")
    return s // 2


def _eval(fn: str, s: int, method: str, tol: float) -> EvalResult:
    if method == "series":
        series = {"zeta": zeta_int_series, "zp1": zeta_plus_one_series, "zm1": zeta_minus_one_series}[fn]
        return series(s, tol)
    m = _even_m(s)
    if fn == "zeta":
        if method == "real":
            raise UnsupportedError("zeta has no separate real form; use --method closed")
        v = zeta_even(m, cap=max(64, s))
        return EvalResult(value=v, method="closed_form", error_bound=4 * math.ulp(v))
    table = {
        ("zp1", "closed"): zeta_plus_one_even,
        ("zp1", "real"): zeta_plus_one_real,
        ("zm1", "closed"): zeta_minus_one_even,
        ("zm1", "real"): zeta_minus_one_real,
    }
    return table[(fn, method)](m)


def _cmd_eval(p: dict) -> dict:
    r = _eval(p["fn"], p["s"], p["method"], p["tol"])
    return {"report": "eval", "fn": p["fn"], "s": p["s"], **r.to_dict()}


def _cmd_table(p: dict) -> dict:
    lo, hi = p["smin"], p["smax"]
    if lo < 2 or hi < lo or lo % 2 or hi % 2:
        raise DomainError(f"need even 2 <= smin <= smax, got {lo}..{hi}")
    if hi > 100:
        raise DomainError("smax must be <= 100")
    rows = []
    for s in range(lo, hi + 1, 2):
        m = s // 2
        zp_c = zeta_plus_one_even(m).value
        zp_s = zeta_plus_one_series(s, p["tol"]).value
        zm_c = zeta_minus_one_even(m).value
        zm_s = zeta_minus_one_series(s, p["tol"]).value
        rows.append({
            "s": s,
            "zp1_closed": zp_c,
            "zp1_series": zp_s,
            "zp1_diff": abs(zp_c - zp_s),
            "zm1_closed": zm_c,
            "zm1_series": zm_s,
            "zm1_diff": abs(zm_c - zm_s),
        })
    return {"report": "table", "tol": p["tol"], "rows": rows}


def _cmd_identity(p: dict) -> dict:
    ident, limit = p["identity_id"], p["limit"]
    if ident == "euler_goldbach":
        r = euler_goldbach_partial(limit)
    elif ident == "shallit_zikan":
        r = shallit_zikan_partial(limit)
    elif ident == "even_sum_3_4":
        r = even_sum_partial(limit)
    elif ident == "zeta4k_sum":
        r = zeta_mod_sum_partial(2, limit)
    else:
        r = zeta_mod_sum_partial(p["m"], limit)
    return {"report": "identity", **r.to_dict()}


def _cmd_verify(p: dict) -> dict:
    return {"report": "contour", **verify(p["fn"], p["m"], p["N"]).to_dict()}


def _cmd_bernoulli(p: dict) -> dict:
    if p["n"] is not None:
        idx = [p["n"]]
    else:
        a, b = p["range"]
        if b < a:
            raise DomainError(f"empty range {a}..{b}")
        idx = list(range(a, b + 1))
    rows = []
    for n in idx:
        v = bernoulli(n)
        rows.append({"n": n, "numerator": v.numerator, "denominator": v.denominator})
    return {"report": "bernoulli", "rows": rows}


def _cmd_selftest(p: dict) -> dict:
    from .selftest import run

    checks = [c.to_dict() for c in run()]
    return {"report": "selftest", "passed": all(c["passed"] for c in checks), "checks": checks}


COMMANDS = {
    "eval": _cmd_eval,
    "table": _cmd_table,
    "identity": _cmd_identity,
    "verify": _cmd_verify,
    "bernoulli": _cmd_bernoulli,
    "selftest": _cmd_selftest,
}


# -- rendering -------------------------------------------------------------


def _fmt(v: Any) -> str:
    if isinstance(v, float):
        return f"{v:.12g}"
    if isinstance(v, dict) and set(v) == {"re", "im"}:
        return f"{v['re']:.12g}{v['im']:+.12g}i"
    return str(v)


def render_json(report: dict) -> str:
    return json.dumps({"schema_version": SCHEMA_VERSION, **report}, allow_nan=False) + "\n"


def render_text(report: dict) -> str:
    kind = report["report"]
    if kind == "table":
        cols = ["s", "zp1_closed", "zp1_series", "zp1_diff", "zm1_closed", "zm1_series", "zm1_diff"]
        lines = ["  ".join(f"{c:>20}" for c in cols)]
        for row in report["rows"]:
            lines.append("  ".join(f"{_fmt(row[c]):>20}" for c in cols))
        return "\n".join(lines) + "\n"
    if kind == "bernoulli":
        return "".join(
            f"B_{r['n']} = {r['numerator']}" + (f"/{r['denominator']}" if r["denominator"] != 1 else "") + "\n"
            for r in report["rows"]
        )
    if kind == "selftest":
        lines = [
            f"[{'PASS' if c['passed'] else 'FAIL'}] {c['criterion']:>2}. {c['name']}: {c['detail']} ({c['seconds']:.2f}s)"
            for c in report["checks"]
        ]
        lines.append("all criteria passed" if report["passed"] else "SOME CRITERIA FAILED")
        return "\n".join(lines) + "\n"
    return "".join(f"{k}: {_fmt(v)}\n" for k, v in report.items() if k != "report")


def render_csv(report: dict) -> str:
    buf = io.StringIO()
    rows = report["rows"]
    writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: repr(v) if isinstance(v, float) else v for k, v in row.items()})
    return buf.getvalue()


RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def dispatch(config: RunConfig) -> tuple[int, str]:
    """Run one command; returns (exit status, rendered report or error text)."""
    handler = COMMANDS.get(config.command)
    if handler is None:
        raise UsageError(f"unknown command {config.command!r}")
    report = handler(config.parameters)
    status = 0
    if report["report"] == "selftest" and not report["passed"]:
        status = 2
    return status, RENDERERS[config.output_format](report)


def main(argv: list[str] | None = None) -> int:
    try:
        config = parse_config(argv)
        status, text = dispatch(config)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"zetaone: error: {exc}", file=sys.stderr)
        return 1
    except NumericError as exc:
        print(f"zetaone: numeric error: {exc}", file=sys.stderr)
        return 2
    if config.output_path:
        with open(config.output_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
