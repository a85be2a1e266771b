"""Command-line entry point.

Exit codes: 0 success / all pass, 1 verification failure, 2 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import finite_oracle, padic_oracle
from .errors import ConfigurationError, DomainError
from .root_system import CartanType, Coweight, build_root_system
from .verification import run_all
from .whittaker import SatakeSpec, eval_whittaker, whittaker_table

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

ORACLE_PRIMES = (2, 3, 5)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigurationError(f"malformed rational {text!r}") from None


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class RunConfig:
    command: str
    args: argparse.Namespace

    @property
    def root_system(self):
        return build_root_system(CartanType.parse(self.args.type))


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_eval(cfg: RunConfig) -> int:
    rs = cfg.root_system
    lam = Coweight.parse(cfg.args.coweight)
    if lam.rank != rs.rank:
        raise ConfigurationError(f"coweight has {lam.rank} entries, {rs.type} needs {rs.rank}")
    w = rs.parse_word(cfg.args.weyl)
    value = eval_whittaker(lam, w)
    if cfg.args.z is None:
        print(value.render())
        return EXIT_OK
    if cfg.args.p is None:
        raise ConfigurationError("--z requires --p for numeric evaluation")
    satake = SatakeSpec(rs.rank, tuple(parse_rational(s) for s in cfg.args.z.split(",")))
    print(format_rational(satake.specialize(value, cfg.args.p)))
    return EXIT_OK


def cmd_table(cfg: RunConfig) -> int:
    rs = cfg.root_system
    if cfg.args.radius is None or cfg.args.radius < 0:
        raise ConfigurationError("--radius must be a non-negative integer")
    rows = whittaker_table(rs, cfg.args.radius)
    if cfg.args.format == "json":
        text = json.dumps([r.to_json() for r in rows], sort_keys=True) + "\n"
    else:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["coweight", "weyl_word", "value"])
        for r in rows:
            writer.writerow([r.coweight.serialize(), r.w.word_string(), r.value.render()])
        text = buf.getvalue()
    _emit(text, cfg.args.out)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    rs = cfg.root_system
    results = run_all(rs)
    ok = all(r.passed for r in results)
    report = {"type": str(rs.type), "suites": {r.name: r.to_json() for r in results}, "pass": ok}
    _emit(json.dumps(report, sort_keys=True, indent=2) + "\n", cfg.args.out)
    if not ok:
        for r in results:
            for f in r.failures:
                print(f"FAIL [{r.name}] {f}", file=sys.stderr)
    return EXIT_OK if ok else EXIT_FAIL


def padic_rows(p: int, z: Fraction, m_values, delta_sign: int = -1) -> list[dict]:
    rs = build_root_system("A1")
    rows = []
    for m in m_values:
        for w_name in ("e", "s"):
            w = rs.identity if w_name == "e" else rs.s(1)
            formula = eval_whittaker(Coweight((m,)), w).specialize(p, (z,))
            oracle = padic_oracle.oracle_whittaker(m, w_name, z, p, delta_sign=delta_sign)
            err = abs(oracle - complex(formula))
            tol = 1e-9 if formula == 0 else 1e-6
            rows.append(
                {
                    "p": p,
                    "z": format_rational(z),
                    "m": m,
                    "w": w_name,
                    "oracle": [oracle.real, oracle.imag],
                    "formula": format_rational(formula),
                    "abs_err": err,
                    "pass": err < tol,
                }
            )
    return rows


def cmd_oracle_padic(cfg: RunConfig) -> int:
    p = cfg.args.p
    if p not in ORACLE_PRIMES:
        raise ConfigurationError(f"--p must be one of {ORACLE_PRIMES}")
    if cfg.args.z is None:
        raise ConfigurationError("--z is required")
    z = parse_rational(cfg.args.z)
    if cfg.args.mmax < cfg.args.mmin:
        raise ConfigurationError("--mmax must be at least --mmin")
    rows = padic_rows(p, z, range(cfg.args.mmin, cfg.args.mmax + 1))
    _emit(json.dumps(rows, sort_keys=True) + "\n", cfg.args.out)
    return EXIT_OK if all(r["pass"] for r in rows) else EXIT_FAIL


def cmd_oracle_finite(cfg: RunConfig) -> int:
    census = finite_oracle.enumerate_cell_census(cfg.args.n, cfg.args.p)
    _emit(json.dumps(census.report(), sort_keys=True) + "\n", cfg.args.out)
    return EXIT_OK if census.passed else EXIT_FAIL


COMMANDS = {
    "eval": cmd_eval,
    "table": cmd_table,
    "verify": cmd_verify,
    "oracle-padic": cmd_oracle_padic,
    "oracle-finite": cmd_oracle_finite,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iwahori-whittaker",
        description="Steinberg Iwahori-Whittaker values, identity suites and oracles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate W at varpi^lambda w")
    p_eval.add_argument("--type", required=True)
    p_eval.add_argument("--coweight", required=True, help="comma-separated ints, fundamental-coweight basis")
    p_eval.add_argument("--weyl", default="", help='reduced word, e.g. "1,2,1"; empty for identity')
    p_eval.add_argument("--z", help="comma-separated rational Satake values")
    p_eval.add_argument("--p", type=int, help="value of q for numeric output")

    p_table = sub.add_parser("table", help="export the value table on a coweight box")
    p_table.add_argument("--type", required=True)
    p_table.add_argument("--radius", type=int, required=True)
    p_table.add_argument("--format", choices=("json", "csv"), default="json")
    p_table.add_argument("--out")

    p_verify = sub.add_parser("verify", help="run every identity suite for a type")
    p_verify.add_argument("--type", required=True)
    p_verify.add_argument("--out")

    p_padic = sub.add_parser("oracle-padic", help="compare the PGL_2 Jacquet integral to the closed formula")
    p_padic.add_argument("--p", type=int, required=True)
    p_padic.add_argument("--z", required=True, help='rational "a/b"')
    p_padic.add_argument("--mmax", type=int, default=3)
    p_padic.add_argument("--mmin", type=int, default=-1)
    p_padic.add_argument("--out")

    p_finite = sub.add_parser("oracle-finite", help="Bruhat cell census of GL_n(F_p)")
    p_finite.add_argument("--n", type=int, required=True)
    p_finite.add_argument("--p", type=int, required=True)
    p_finite.add_argument("--out")
    return parser


_VALUE_FLAGS = {"--coweight", "--weyl", "--z", "--mmin", "--mmax", "--radius", "--p", "--n"}


def _glue_values(argv: list[str]) -> list[str]:
    # "--coweight -1,0" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            elif nxt.startswith("-") and nxt not in _VALUE_FLAGS and not nxt.startswith("--"):
                out.append(f"{tok}={nxt}")
            else:
                out.extend([tok, nxt])
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(_glue_values(sys.argv[1:] if argv is None else list(argv)))
    cfg = RunConfig(args.command, args)
    try:
        return COMMANDS[args.command](cfg)
    except (ConfigurationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
