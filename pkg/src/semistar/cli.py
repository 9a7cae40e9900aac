"""Command-line interface.

    semistar run <file.json> [--seed S] [--cutoff C] [--timings]
    semistar fixtures [--only NAME]
    semistar suite [--models M,...] [--ops OP,...] [-n N] [--seed S] [--cutoff C]
    semistar eval --model M --op OP --ideal LIT
    semistar spectrum --model M --op OP

SEMISTAR_SEED overrides the default seed.  Exit codes: 0 pass, 1 fail,
2 inconclusive only, 3 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import ParseError, SemistarError
from .harness import FIXTURES, _env_seed, run_fixtures, run_scenario
from .models import default_models, model_from_compact
from .operations import closure, quasi_spectrum
from .registry import parse_descriptor, parse_operation
from .report import EXIT_USAGE, CheckRecord, Report
from .suite import run_property_suite


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semistar",
        description="Exact fractional-ideal arithmetic and semistar operations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run_p = sub.add_parser("run", help="execute a scenario file")
    run_p.add_argument("path")
    run_p.add_argument("--seed", type=int)
    run_p.add_argument("--cutoff", type=int)
    run_p.add_argument("--timings", action="store_true")

    fx = sub.add_parser("fixtures", help="run the built-in fixtures")
    fx.add_argument("--only", choices=sorted(FIXTURES))
    fx.add_argument("--seed", type=int)
    fx.add_argument("--timings", action="store_true")

    st = sub.add_parser("suite", help="run the property suite")
    st.add_argument("--models", help="comma-separated model literals")
    st.add_argument("--ops", help="comma-separated operation names")
    st.add_argument("--laws", help="comma-separated law names")
    st.add_argument("-n", type=int, default=200, dest="samples")
    st.add_argument("--seed", type=int)
    st.add_argument("--cutoff", type=int, default=64)

    ev = sub.add_parser("eval", help="evaluate a closure")
    ev.add_argument("--model", required=True)
    ev.add_argument("--op", required=True)
    ev.add_argument("--ideal", required=True)

    sp = sub.add_parser("spectrum", help="quasi-spectrum of an operation")
    sp.add_argument("--model", required=True)
    sp.add_argument("--op", required=True)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0

    try:
        if args.command == "run":
            report = run_scenario(args.path, seed=args.seed, cutoff=args.cutoff)
            print(report.to_json(include_timing=args.timings))
            return report.exit_code

        if args.command == "fixtures":
            report = run_fixtures(only=args.only, seed=args.seed)
            print(report.to_json(include_timing=args.timings))
            return report.exit_code

        if args.command == "suite":
            models = (
                [model_from_compact(m) for m in args.models.split(",")]
                if args.models
                else default_models()
            )
            ops = args.ops.split(",") if args.ops else None
            laws = args.laws.split(",") if args.laws else None
            seed = args.seed if args.seed is not None else _env_seed()
            results = run_property_suite(
                models, op_filter=ops, n=args.samples, seed=seed, cutoff=args.cutoff, laws=laws
            )
            report = Report(seed=seed)
            for r in results:
                report.record(
                    CheckRecord(
                        name=f"{r.law}[{r.model}]" + (f"[{r.op}]" if r.op else ""),
                        inputs={"n": r.checked},
                        verdict=r.verdict,
                        witness=r.witness,
                        detail={"passed": r.passed, "inconclusive": r.inconclusive},
                    )
                )
            print(report.to_json())
            return report.exit_code

        if args.command == "eval":
            model = model_from_compact(args.model)
            op = parse_operation(model, args.op)
            ideal = parse_descriptor(model, args.ideal)
            print(repr(closure(op, ideal)))
            return 0

        if args.command == "spectrum":
            model = model_from_compact(args.model)
            spec = quasi_spectrum(parse_operation(model, args.op))
            print(
                "quasi-maximals:",
                ", ".join(s.name for s in spec.quasi_maximals) or "(none)",
            )
            print(
                "quasi-primes:  ",
                ", ".join(s.name for s in spec.quasi_primes) or "(none)",
            )
            print(
                "pi-star:       ",
                ", ".join(s.name for s in spec.pi_star) or "(none)",
            )
            return 0
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SemistarError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
