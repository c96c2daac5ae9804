"""Command-line front end.

Subcommands: eval, sample, classify, extremal, kappa2, verify.  Exact values
are printed in the package's textual encodings; decimals carry 30 significant
digits and are approximate.  Exit codes: 0 success, 1 usage error,
2 infeasible instance or cap exceeded, 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import cf, surd
from .cf import Orientation, PeriodicCF
from .classify import classify_verdict, kappa2_bracket
from .config import RunConfig
from .encode import (decimal_str, exact_str, fraction_str, parse_fraction,
                     parse_seq, seq_str, surd_str)
from .extremal import (CapExceededError, ExtremalInstance, InfeasibleError,
                       brute_extrema, max_construct, min_construct)
from .geval import LambdaKind, g_finite_series, g_mediant, sample_farey
from .verify import report_json, report_markdown, trace_json, verify_suite

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_INFEASIBLE = 2
EXIT_VERIFY_FAILED = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _parse_lambda(text: str):
    table = {"half": LambdaKind.HALF, "phi-inv": LambdaKind.PHI_INV,
             "tau": LambdaKind.TAU}
    if text in table:
        return table[text]
    value = parse_fraction(text)
    if not 0 < value < 1:
        raise ValueError(f"rational weight must lie in (0, 1), got {text}")
    return value


def _parse_orientation(text: str) -> Orientation:
    try:
        return Orientation(text)
    except ValueError:
        raise ValueError(f"orientation must be phi or tau, got {text!r}")


def _emit(text: str, path):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_eval(args, config: RunConfig) -> int:
    lam = _parse_lambda(args.lam)
    if args.x_is_cf:
        seq = parse_seq(args.x)
        value = g_finite_series(lam, seq)
        x = cf.value_of(seq)
    else:
        x = parse_fraction(args.x)
        value = g_mediant(lam, x)
    if args.format == "json":
        payload = {"lambda": args.lam, "x": fraction_str(x),
                   "exact": exact_str(value), "decimal": decimal_str(value)}
        _emit(json.dumps(payload, sort_keys=True) + "\n", args.output)
    else:
        _emit(f"{exact_str(value)}\n{decimal_str(value)}\n", args.output)
    return EXIT_OK


def _cmd_sample(args, config: RunConfig) -> int:
    lam = _parse_lambda(args.lam)
    table = sample_farey(lam, args.depth, depth_cap=config.farey_depth_cap)
    lines = ["x_num,x_den,g_exact,g_decimal"]
    for x, g in table:
        lines.append(f"{x.numerator},{x.denominator},{exact_str(g)},{decimal_str(g)}")
    _emit("\n".join(lines) + "\n", args.output)
    return EXIT_OK


def _cmd_classify(args, config: RunConfig) -> int:
    period = parse_seq(args.period)
    preperiod = parse_seq(args.preperiod) if args.preperiod else ()
    o = _parse_orientation(args.orientation)
    verdict = classify_verdict(PeriodicCF(preperiod, period), o)
    cert = verdict.certificate
    payload = {
        "period": seq_str(period),
        "preperiod": seq_str(preperiod),
        "orientation": o.value,
        "kappa": fraction_str(verdict.kappa),
        "growth_rate_exact": surd_str(verdict.rate.value),
        "growth_rate_decimal": decimal_str(verdict.rate.value),
        "classification": verdict.classification.value,
        "certificate": {
            "lambda_squared": surd_str(cert.lambda_squared),
            "phi_exponent": cert.exponent,
            "phi_power": exact_str(cert.phi_power),
            "sign": cert.sign,
        },
    }
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_extremal(args, config: RunConfig) -> int:
    o = _parse_orientation(args.orientation)
    inst = ExtremalInstance(args.n, args.s, o)
    payload = {"n": args.n, "s": args.s, "orientation": o.value,
               "mode": args.mode}
    if args.mode == "min":
        seq = min_construct(inst)
        payload.update(sequence=seq_str(seq), certified=True)
        value = cf.continuant(seq)
    elif args.mode == "max":
        built = max_construct(inst)
        payload.update(sequence=seq_str(built.sequence), certified=built.certified)
        value = cf.continuant(built.sequence)
    else:
        res = brute_extrema(inst, cap=config.brute_cap)
        payload.update(sequence=seq_str(res.max_seq), certified=True,
                       count=res.count,
                       min_sequence=seq_str(res.min_seq),
                       min_value_exact=str(res.min_value))
        value = res.max_value
    payload["value_exact"] = str(value)
    payload["value_decimal"] = decimal_str(Fraction(value))
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_kappa2(args, config: RunConfig) -> int:
    eps = parse_fraction(args.epsilon)
    bracket = kappa2_bracket(eps)
    payload = {
        "lo": fraction_str(bracket.lo),
        "hi": fraction_str(bracket.hi),
        "witness_lo": seq_str(bracket.witness_lo.period),
        "witness_hi": seq_str(bracket.witness_hi.period),
        "steps": len(bracket.trace),
    }
    if args.trace:
        Path(args.trace).write_text(trace_json(bracket))
    _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.output)
    return EXIT_OK


def _cmd_verify(args, config: RunConfig) -> int:
    report = verify_suite(inject_fault=args.inject_fault)
    md = report_markdown(report)
    if args.output:
        out = Path(args.output)
        out.mkdir(parents=True, exist_ok=True)
        (out / "report.md").write_text(md)
        (out / "report.json").write_text(report_json(report))
        if report.bracket is not None:
            (out / "kappa2_trace.json").write_text(trace_json(report.bracket))
    sys.stdout.write(md)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def build_parser() -> _Parser:
    parser = _Parser(prog="dtu", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate g_lambda at a rational point")
    p.add_argument("--lambda", dest="lam", required=True,
                   help="half | phi-inv | tau | p/q")
    p.add_argument("--x", required=True, help="rational point p/q in [0, 1]")
    p.add_argument("--x-is-cf", action="store_true",
                   help="interpret --x as a quotient sequence a1,a2,...")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_eval)

    p = sub.add_parser("sample", help="CSV of g over a Farey order")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("classify", help="derivative verdict for a periodic point")
    p.add_argument("--period", required=True, help="quotients a1,a2,...")
    p.add_argument("--preperiod", default="", help="optional quotients")
    p.add_argument("--orientation", default="phi", help="phi | tau")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("extremal", help="extremal continuants at fixed (n, S)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--orientation", default="phi", help="phi | tau")
    p.add_argument("--mode", choices=("min", "max", "brute"), required=True)
    p.add_argument("--output")
    p.set_defaults(func=_cmd_extremal)

    p = sub.add_parser("kappa2", help="certified threshold enclosure")
    p.add_argument("--epsilon", required=True, help="positive fraction")
    p.add_argument("--trace", help="path for the step trace (JSON)")
    p.add_argument("--output")
    p.set_defaults(func=_cmd_kappa2)

    p = sub.add_parser("verify", help="run the verification suite")
    p.add_argument("--output", help="directory for report artifacts")
    p.add_argument("--inject-fault", default=None,
                   help="flip the named check (report plumbing test)")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        config = RunConfig.from_env()
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    surd.set_default_precision_cap(config.precision_bits_cap)
    try:
        return args.func(args, config)
    except (InfeasibleError, CapExceededError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
