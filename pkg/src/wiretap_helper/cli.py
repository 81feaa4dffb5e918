"""Command-line front end: rate reports, sweeps, and verification runs.

Exit codes: 0 success, 1 check failure, 2 usage error, 3 I/O error.
Configuration precedence is flags, then WTH_-prefixed environment
variables, then built-in defaults.
"""

from __future__ import annotations

import argparse
import os
import sys
from fractions import Fraction

from .bounds import gaussian_upper_bounds, upper_bounds
from .errors import ParameterError
from .gaussian import GaussianParams, correspondence, gaussian_rate, to_fraction
from .ldm import ChannelParams
from .scheme import CaseTag, r_achievable
from .sweep import DET_AXES, GAUSS_AXES, SweepSpec, format_number, run_sweep, write_csv, write_svg
from .verify import run_verification

ENV_LOG_SNR1 = "WTH_DEFAULT_LOG_SNR1"
ENV_MAX_Q = "WTH_MAX_Q"
SCHEME_CHECK_CAP = 24
ORACLE_CHECK_CAP = 10


def _rational(text: str) -> Fraction:
    try:
        return to_fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _nonneg_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return value


def _env_fraction(name: str, fallback: Fraction) -> Fraction:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return to_fraction(raw)
    except ValueError:
        return fallback


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return fallback
    try:
        return int(raw)
    except ValueError:
        return fallback


def _add_family_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n11", type=_nonneg_int, help="direct gain, bit levels")
    sub.add_argument("--n21", type=_nonneg_int, help="helper gain at the legitimate receiver")
    sub.add_argument("--n2", type=_nonneg_int, help="common gain at the eavesdropper")
    sub.add_argument("--log-snr1", type=_rational, dest="log_snr1",
                     help="log2 SNR of the direct link (Gaussian family)")
    sub.add_argument("--beta1", type=_rational, help="helper SNR exponent")
    sub.add_argument("--beta2", type=_rational, help="eavesdropper SNR exponent")
    sub.add_argument("--const-c", type=_rational, dest="const_c", default=Fraction(0),
                     help="constant-gap term added to Gaussian bounds (default 0)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wth",
        description="Secrecy rates, converse bounds, and exact scheme verification "
                    "for the deterministic wiretap channel with a helper.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    rates = sub.add_parser("rates", help="single-instance rate and bound report")
    _add_family_flags(rates)

    gauss = sub.add_parser("gaussian", help="rates with the Gaussian parameter family")
    _add_family_flags(gauss)

    sweep = sub.add_parser("sweep", help="sweep one parameter and write CSV or SVG")
    sweep.add_argument("--axis", required=True, choices=DET_AXES + GAUSS_AXES)
    sweep.add_argument("--start", type=_rational, required=True)
    sweep.add_argument("--stop", type=_rational, required=True)
    sweep.add_argument("--step", type=_rational, required=True)
    _add_family_flags(sweep)
    sweep.add_argument("--out", default="-", help="output path, '-' for stdout")
    sweep.add_argument("--format", choices=("csv", "svg"), default="csv")
    sweep.add_argument("--asymptotic", action="store_true",
                       help="report the deterministic normalized rate under the "
                            "integer correspondence instead of the finite-SNR one")

    verify = sub.add_parser("verify", help="run the exact checks over a parameter grid")
    verify.add_argument("--max-q", type=_nonneg_int, dest="max_q", default=None,
                        help=f"grid cap (env {ENV_MAX_Q}, default 8)")
    verify.add_argument("--oracle", action="store_true",
                        help="also run the exhaustive allocation oracle")
    verify.add_argument("--seed", type=int, default=0)
    return parser


def _fmt(x) -> str:
    return format_number(Fraction(x))


def _print_bound_block(ub, r_ach) -> None:
    print(f"ub1: {_fmt(ub.ub1)}")
    print(f"ub2: {_fmt(ub.ub2)}")
    print(f"ub3: {_fmt(ub.ub3)}")
    print(f"min_ub: {_fmt(ub.min_ub)}")
    print(f"tight: {'yes' if Fraction(r_ach) == ub.min_ub else 'no'}")


def _cmd_rates(args: argparse.Namespace, parser: argparse.ArgumentParser,
               gaussian_only: bool) -> int:
    det_given = [v for v in (args.n11, args.n21, args.n2) if v is not None]
    gauss_given = args.beta1 is not None or args.beta2 is not None
    if det_given and (gauss_given or args.log_snr1 is not None):
        parser.error("supply either --n11/--n21/--n2 or --log-snr1/--beta1/--beta2, not both")
    if gaussian_only and det_given:
        parser.error("the gaussian command takes --log-snr1/--beta1/--beta2")

    if det_given and not gaussian_only:
        if len(det_given) != 3:
            parser.error("the deterministic family needs all of --n11, --n21, --n2")
        p = ChannelParams(args.n11, args.n21, args.n2)
        br = r_achievable(p)
        ub = upper_bounds(p)
        print("family: deterministic")
        print(f"n11={p.n11} n21={p.n21} n2={p.n2} (q={p.q}, delta={p.delta})")
        print(f"case: {br.case_tag.value}")
        if br.case_tag is CaseTag.SINGULAR:
            print("note: equal direct and helper gains admit no alignment scheme; "
                  "only the private rate is reported")
        print(f"r_private: {br.r_private}")
        print(f"r_common: {br.r_common}")
        print(f"r_ach: {br.r_ach}")
        _print_bound_block(ub, br.r_ach)
        return 0

    if args.beta1 is None or args.beta2 is None:
        parser.error("the Gaussian family needs --beta1 and --beta2")
    log_snr1 = args.log_snr1 if args.log_snr1 is not None else _env_fraction(
        ENV_LOG_SNR1, Fraction(40)
    )
    g = GaussianParams(log_snr1, args.beta1, args.beta2)
    gb = gaussian_rate(g)
    cp = correspondence(g)
    ub = gaussian_upper_bounds(cp, args.const_c)
    print("family: gaussian")
    print(f"log_snr1={format_number(g.log_snr1)} beta1={format_number(g.beta1)} "
          f"beta2={format_number(g.beta2)}")
    print(f"case: {gb.case_tag.value}")
    if gb.case_tag is CaseTag.SINGULAR:
        print("note: beta1 = 1 leaves no scale offset to align against; "
              "only the private rate is reported")
    print(f"r_private: {_fmt(gb.r_private)}")
    print(f"r_common: {_fmt(gb.r_common)}")
    print(f"r_gross: {_fmt(gb.r_gross)}")
    print(f"level_penalty: {gb.d}")
    print(f"r_ach: {_fmt(gb.r_ach)}")
    print(f"normalized: {format_number(gb.normalized)}")
    if gb.r_common_sum is not None:
        print(f"r_common_sum: {gb.r_common_sum:.6f}")
    print(f"correspondence: n11={cp.n11} n21={cp.n21} n2={cp.n2}")
    _print_bound_block(ub, gb.r_ach)
    return 0


def _cmd_sweep(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    fixed: dict[str, Fraction] = {}
    for name in ("beta1", "beta2"):
        v = getattr(args, name)
        if v is not None and name != args.axis:
            fixed[name] = v
    for name in DET_AXES:
        v = getattr(args, name)
        if v is not None and name != args.axis:
            fixed[name] = Fraction(v)
    log_snr1 = args.log_snr1 if args.log_snr1 is not None else _env_fraction(
        ENV_LOG_SNR1, Fraction(40)
    )
    spec = SweepSpec(
        axis=args.axis, start=args.start, stop=args.stop, step=args.step,
        fixed=fixed, log_snr1=log_snr1, const_c=args.const_c,
        asymptotic=args.asymptotic,
    )
    try:
        rows = run_sweep(spec)
    except ParameterError as exc:
        parser.error(str(exc))
    try:
        fh = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    except OSError as exc:
        print(f"cannot open output: {exc}", file=sys.stderr)
        return 3
    try:
        if args.format == "csv":
            write_csv(rows, fh)
        else:
            write_svg(rows, fh, axis_label=args.axis)
    except OSError as exc:
        print(f"cannot write output: {exc}", file=sys.stderr)
        return 3
    finally:
        if fh is not sys.stdout:
            fh.close()
    return 0


def _cmd_verify(args: argparse.Namespace, parser: argparse.ArgumentParser) -> int:
    max_q = args.max_q if args.max_q is not None else _env_int(ENV_MAX_Q, 8)
    if args.oracle and max_q > ORACLE_CHECK_CAP:
        parser.error(f"--oracle runs are capped at max-q {ORACLE_CHECK_CAP}")
    if max_q > SCHEME_CHECK_CAP:
        parser.error(f"verification grids are capped at max-q {SCHEME_CHECK_CAP}")
    run = run_verification(max_q, with_oracle=args.oracle, seed=args.seed)
    print(f"instances checked: {run.instances} (q <= {max_q})")
    print(f"schemes built and verified: {run.schemes_checked}")
    if args.oracle:
        print(f"oracle searches: {run.oracle_checked}")
    for line in run.findings:
        print(f"finding: {line}")
    for line in run.failures:
        print(f"FAIL: {line}")
    print("result: " + ("ok" if run.ok else "FAILED"))
    return 0 if run.ok else 1


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "rates":
        return _cmd_rates(args, parser, gaussian_only=False)
    if args.command == "gaussian":
        return _cmd_rates(args, parser, gaussian_only=True)
    if args.command == "sweep":
        return _cmd_sweep(args, parser)
    if args.command == "verify":
        return _cmd_verify(args, parser)
    parser.error(f"unknown command {args.command!r}")
    return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
