"""Command line entry point: verify, group, period, simulate.

Exit codes: 0 all checks passed, 1 a check failed, 2 usage error,
3 a group closure hit ``--max-elements``.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import groups, walk
from .verify import EXACT_LIMIT, SCHEMA_VERSION, run_verification

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3
MAX_N = 32

log = logging.getLogger("grovergroup")


def _n_type(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {value!r}") from None
    if not 2 <= n <= MAX_N:
        raise argparse.ArgumentTypeError(f"n must be in 2..{MAX_N}, got {n}")
    return n


def _write(text: str, out: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _dump(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


def cmd_verify(args) -> int:
    report = run_verification(args.n, args.engine, seed=args.seed,
                              max_elements=args.max_elements, exact_limit=args.exact_limit)
    _write(_dump(report.to_dict(timing=args.timing)), args.out)
    for c in report.failed():
        log.error("check failed: %s %s", c.name, c.details)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_group(args) -> int:
    engine = "monomial" if args.engine == "both" else args.engine
    report = groups.build_group_report(args.n, engine, args.max_elements)
    body = {"schema_version": SCHEMA_VERSION, "kind": "group", **report.to_dict()}
    ok = (report.quotient_structure == groups.expected_quotient(args.n).name
          and report.order_H == 2 ** (args.n - 1)
          and report.minimal_exponent_m == 2 * args.n)
    if args.engine == "both":
        other = groups.build_group_report(args.n, "exact", args.max_elements)
        body["cross_check_exact"] = other.to_dict()
        ok = ok and other.to_dict() | {"engine": engine} == report.to_dict()
    _write(_dump(body), args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_period(args) -> int:
    expected = 2 * args.n
    results = {}
    if args.mode in ("exact", "both"):
        engine = "monomial" if args.engine == "both" else args.engine
        results["exact"] = groups.minimal_common_exponent(args.n, engine, args.max_elements)
    if args.mode in ("float", "both"):
        results["float"] = walk.detect_period(args.n, seed=args.seed)
    if args.format == "json":
        text = _dump({"schema_version": SCHEMA_VERSION, "kind": "period", "n": args.n,
                      "seed": args.seed, "expected": expected, **results})
    else:
        text = "".join(f"{k} {v}\n" for k, v in results.items())
    _write(text, args.out)
    return EXIT_OK if all(v == expected for v in results.values()) else EXIT_FAIL


def cmd_simulate(args) -> int:
    try:
        init = walk.parse_init(args.init, args.n, seed=args.seed)
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    trace = walk.simulate(args.n, init, args.steps, seed=args.seed)
    if args.out == "-":
        trace.write_probability_csv(sys.stdout)
    else:
        with open(args.out, "w", newline="") as fh:
            trace.write_probability_csv(fh)
    if args.amplitudes:
        with open(args.amplitudes, "w", newline="") as fh:
            trace.write_amplitude_csv(fh)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="grovergroup", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=_n_type, required=True, help="number of vertices (2..%d)" % MAX_N)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", default="-", help="output path, '-' for stdout")
    common.add_argument("--max-elements", type=int, default=groups.DEFAULT_MAX_ELEMENTS)
    common.add_argument("--engine", choices=("monomial", "exact", "both"), default="monomial")

    p = sub.add_parser("verify", parents=[common], help="run the full check suite")
    p.add_argument("--format", choices=("json",), default="json")
    p.add_argument("--exact-limit", type=int, default=EXACT_LIMIT,
                   help="largest n for checks that build the n^2 x n^2 matrix exactly")
    p.add_argument("--timing", action="store_true", help="include elapsed time in the report")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("group", parents=[common], help="write a group report")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("period", parents=[common], help="least m with (S^j G)^m = I")
    p.add_argument("--mode", choices=("exact", "float", "both"), default="both")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_period)

    p = sub.add_parser("simulate", parents=[common], help="write a walk trace as csv")
    p.add_argument("--steps", type=int, default=0)
    p.add_argument("--init", default="uniform", help="uniform | vertex:j | seeded-random")
    p.add_argument("--format", choices=("csv",), default="csv")
    p.add_argument("--amplitudes", default=None, help="also write t,index,re,im to this path")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    if getattr(args, "steps", 0) < 0:
        parser.error("--steps must be non-negative")
    try:
        return args.func(args)
    except groups.ClosureLimitError as exc:
        log.error("%s", exc)
        return EXIT_RESOURCE


if __name__ == "__main__":
    sys.exit(main())
