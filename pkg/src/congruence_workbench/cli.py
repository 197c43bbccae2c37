"""Command-line front end.

Subcommands: coeffs, eta, verify, find-w, sharpness, residues (plus the
hidden seed-examples, which regenerates every built-in fixture).  Exit
codes: 0 success/verified, 1 counterexample or inconclusive probe,
2 precondition or usage failure.

Integer flags accept either decimal literals or exact arithmetic
expressions such as ``(13^12-1)/12``; rational flags accept ``a/b``
or the same expression syntax.  ``CONGRUENCE_WORKBENCH_THREADS`` caps
the worker pool used for independent verifications; output is ordered
deterministically regardless of the setting.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import __version__
from .arith import NotLIntegralError, PreconditionError
from .backend import BACKEND_NAME, format_rational
from .congruence import (
    HypothesisError,
    VerificationStatus,
    build_cw_claim,
    build_remark_claim,
    build_t1_claim,
    build_t2_claim,
    build_t3_claim,
    certificate_line,
    find_residues,
    find_w,
    sharpness_probe,
    verify_claim,
)
from .forms import eta_power
from .intexpr import ExpressionError, evaluate_int, evaluate_rational
from .qseries import frac_partition_series, series_reduce_mod

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_PRECONDITION = 2

THREADS_ENV_VAR = "CONGRUENCE_WORKBENCH_THREADS"
DEFAULT_MAX_PRECISION = 50_000
DEFAULT_N_MAX = 10

_VISIBLE_COMMANDS = "{coeffs,eta,verify,find-w,sharpness,residues}"


@dataclass(frozen=True)
class CliConfig:
    output: str = "table"
    out_path: str | None = None
    max_precision: int = DEFAULT_MAX_PRECISION
    default_n_max: int = DEFAULT_N_MAX
    threads: int = 1


class UsageError(ValueError):
    pass


def _threads_from_env() -> int:
    raw = os.environ.get(THREADS_ENV_VAR)
    if raw is None:
        return 1
    try:
        threads = int(raw)
    except ValueError:
        raise UsageError(f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}")
    if threads < 1:
        raise UsageError(f"{THREADS_ENV_VAR} must be a positive integer, got {raw!r}")
    return threads


def _parse_alpha(text: str):
    try:
        return evaluate_rational(text)
    except ExpressionError as exc:
        raise UsageError(f"bad rational --alpha: {exc}")


def _parse_int_flag(name: str, text: str) -> int:
    try:
        return evaluate_int(text)
    except ExpressionError as exc:
        raise UsageError(f"bad integer {name}: {exc}")


def _parse_mod(text: str) -> tuple[int, int]:
    base, sep, exp = text.partition("^")
    try:
        ell = int(base)
        k = int(exp) if sep else 1
    except ValueError:
        raise UsageError(f"--mod expects L or L^K, got {text!r}")
    if k < 1:
        raise UsageError("--mod exponent must be >= 1")
    return ell, k


def _emit(line: str, out_path: str | None):
    if out_path is None:
        print(line)
    else:
        with open(out_path, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")


def _build_claim(args, config: CliConfig):
    alpha = _parse_alpha(args.alpha)
    family = args.family
    r = _parse_int_flag("--r", args.r)
    if family == "cw":
        return build_cw_claim(alpha, _require(args, "d"), _require(args, "ell"), r)
    if family == "t1":
        return build_t1_claim(alpha, _require(args, "d"), _require(args, "ell"), r)
    if family == "t2":
        return build_t2_claim(alpha, _require(args, "ell"), r)
    if family == "t3":
        return build_t3_claim(alpha, _require(args, "ell"), _require(args, "v"), r)
    if family == "remark":
        return build_remark_claim(alpha, _require(args, "d"), _require(args, "ell"), r)
    raise UsageError(f"unknown family {family!r}")


def _require(args, name: str) -> int:
    value = getattr(args, name, None)
    if value is None:
        raise UsageError(f"--{name} is required for --family {args.family}")
    return value


def cmd_coeffs(args, config: CliConfig) -> int:
    alpha = _parse_alpha(args.alpha)
    series = frac_partition_series(alpha, args.n + 1)
    if args.mod is not None:
        ell, k = _parse_mod(args.mod)
        series = series_reduce_mod(series, ell, k)
        fmt = str
    else:
        fmt = format_rational
    for n, c in enumerate(series.coeffs):
        if config.output == "jsonl":
            _emit(json.dumps({"n": n, "value": fmt(c)}, separators=(",", ":")), config.out_path)
        else:
            _emit(f"{n}\t{fmt(c)}", config.out_path)
    return EXIT_OK


def cmd_eta(args, config: CliConfig) -> int:
    series = eta_power(args.d, args.n + 1)
    for n, c in series.nonzero_items():
        if config.output == "jsonl":
            _emit(
                json.dumps({"n": n, "value": format_rational(c)}, separators=(",", ":")),
                config.out_path,
            )
        else:
            _emit(f"{n}\t{format_rational(c)}", config.out_path)
    return EXIT_OK


def cmd_verify(args, config: CliConfig) -> int:
    claim = _build_claim(args, config)
    n_max = args.nmax if args.nmax is not None else config.default_n_max
    report = verify_claim(claim, n_max, max_precision=config.max_precision)
    _emit(certificate_line(report), config.out_path)
    if report.status is VerificationStatus.VERIFIED_IN_RANGE:
        return EXIT_OK
    if report.status is VerificationStatus.COUNTEREXAMPLE:
        return EXIT_NEGATIVE
    return EXIT_PRECONDITION


def cmd_find_w(args, config: CliConfig) -> int:
    _emit(str(find_w(args.ell, args.v)), config.out_path)
    return EXIT_OK


def cmd_sharpness(args, config: CliConfig) -> int:
    claim = _build_claim(args, config)
    n_max = args.nmax if args.nmax is not None else config.default_n_max
    witness = sharpness_probe(claim, n_max, max_precision=config.max_precision)
    if witness is None:
        if config.output == "jsonl":
            _emit(json.dumps({"status": "inconclusive"}, separators=(",", ":")), config.out_path)
        else:
            _emit("inconclusive", config.out_path)
        return EXIT_NEGATIVE
    if config.output == "jsonl":
        _emit(
            json.dumps(
                {
                    "status": "witness",
                    "n": witness.n,
                    "value": format_rational(witness.value),
                    "ord": claim.modulus_power,
                },
                separators=(",", ":"),
            ),
            config.out_path,
        )
    else:
        _emit(
            f"{witness.n}\t{format_rational(witness.value)}\tord={claim.modulus_power}",
            config.out_path,
        )
    return EXIT_OK


def cmd_residues(args, config: CliConfig) -> int:
    for r in find_residues(args.d, args.ell, args.ord, args.count):
        _emit(str(r), config.out_path)
    return EXIT_OK


def _seed_example_tasks():
    """Fixture reproduction: one callable per built-in example."""
    tasks = []

    def coefficient_fixture(label, alpha_text, n):
        def run():
            value = frac_partition_series(evaluate_rational(alpha_text), n + 1).coeff(n)
            return {"fixture": label, "n": n, "value": format_rational(value)}

        return run

    def verify_fixture(label, build, n_max):
        def run():
            report = verify_claim(build(), n_max, max_precision=DEFAULT_MAX_PRECISION)
            return json.loads(certificate_line(report)) | {"fixture": label}

        return run

    tasks.append(coefficient_fixture("p(-1/8)(5)", "-1/8", 5))
    tasks.append(coefficient_fixture("p(1/13)(7)", "1/13", 7))
    tasks.append(
        verify_fixture("t1-example", lambda: build_t1_claim(evaluate_rational("-1/8"), 6, 7, 5), 10)
    )
    tasks.append(
        verify_fixture("t2-example", lambda: build_t2_claim(evaluate_rational("1/13"), 5, 7), 10)
    )
    tasks.append(
        verify_fixture("ramanujan-mod-5", lambda: build_cw_claim(-1, 4, 5, 4), 100)
    )

    def find_w_fixture():
        return {"fixture": "find-w", "ell": 13, "v": 1, "w": find_w(13, 1)}

    tasks.append(find_w_fixture)

    def residue_fixture():
        return {
            "fixture": "t3-residue",
            "d": 2,
            "ell": 13,
            "ord": 12,
            "r": find_residues(2, 13, 12, 1)[0],
        }

    tasks.append(residue_fixture)
    return tasks


def cmd_seed_examples(args, config: CliConfig) -> int:
    tasks = _seed_example_tasks()
    if config.threads > 1:
        with ThreadPoolExecutor(max_workers=config.threads) as pool:
            results = list(pool.map(lambda task: task(), tasks))
    else:
        results = [task() for task in tasks]
    for record in results:
        _emit(json.dumps(record, separators=(",", ":")), config.out_path)
    return EXIT_OK


def _int_expr_type(text: str) -> str:
    return text


# Values like "-1/8" or "-(13^12-1)/12" start with a dash; every option here
# is --long-style, so widen what argparse treats as a negative-number value.
_DASH_VALUE = re.compile(r"^-[\d(]")


def _new_parser(factory, *args, **kwargs) -> argparse.ArgumentParser:
    parser = factory(*args, **kwargs)
    parser._negative_number_matcher = _DASH_VALUE
    return parser


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--output", choices=("table", "jsonl"), default="table", help="value formatting mode"
    )
    common.add_argument("--out", metavar="FILE", help="append output lines to FILE instead of stdout")
    common.add_argument(
        "--max-prec",
        type=int,
        default=DEFAULT_MAX_PRECISION,
        help="refuse verifications needing more series precision than this",
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    # Shared flags are attached to each subcommand; argparse subparsers parse
    # into a fresh namespace, so top-level duplicates would be clobbered.
    common = _common_flags()
    parser = _new_parser(
        argparse.ArgumentParser,
        prog="congruence-workbench",
        description="Exact fractional-partition coefficients, eta powers, and congruence certificates.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__} ({BACKEND_NAME})")
    sub = parser.add_subparsers(dest="command", metavar=_VISIBLE_COMMANDS, required=True)

    p = _new_parser(sub.add_parser, "coeffs", parents=[common], help="print p_alpha(0..N)")
    p.add_argument("--alpha", required=True, help="rational exponent, e.g. -1/8")
    p.add_argument("--n", type=int, required=True, help="largest index printed")
    p.add_argument("--mod", help="reduce mod L^K (L prime)")
    p.set_defaults(handler=cmd_coeffs)

    p = _new_parser(sub.add_parser, "eta", parents=[common], help="print nonzero eta-power coefficients a_D(0..N)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(handler=cmd_eta)

    for name, handler in (("verify", cmd_verify), ("sharpness", cmd_sharpness)):
        p = _new_parser(
            sub.add_parser,
            name,
            parents=[common],
            help="emit a certificate line" if name == "verify" else "search for a sharpness witness",
        )
        p.add_argument("--family", required=True, choices=("cw", "t1", "t2", "t3", "remark"))
        p.add_argument("--alpha", required=True)
        p.add_argument("--d", type=int)
        p.add_argument("--ell", type=int)
        p.add_argument("--v", type=int, help="modulus exponent for --family t3")
        p.add_argument("--r", required=True, type=_int_expr_type, help="residue (literal or expression)")
        p.add_argument("--nmax", type=int, help=f"range bound (default {DEFAULT_N_MAX})")
        p.set_defaults(handler=handler)

    p = _new_parser(sub.add_parser, "find-w", parents=[common], help="smallest w with a_2(ell^w) == 0 mod ell^v")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--v", type=int, required=True)
    p.set_defaults(handler=cmd_find_w)

    p = _new_parser(sub.add_parser, "residues", parents=[common], help="smallest residues with prescribed exact ord")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--ord", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.set_defaults(handler=cmd_residues)

    p = _new_parser(sub.add_parser, "seed-examples", parents=[common])
    p.set_defaults(handler=cmd_seed_examples)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        config = CliConfig(
            output=args.output,
            out_path=args.out,
            max_precision=args.max_prec,
            threads=_threads_from_env(),
        )
        return args.handler(args, config)
    except (UsageError, HypothesisError, NotLIntegralError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except ExpressionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def run():
    sys.exit(main())


if __name__ == "__main__":
    run()
