"""Command line: ``quadco normalize | table | verify``.

Exit codes: 0 pass, 1 verification mismatch, 2 usage error, 3 step limit.
JSON goes to stdout with sorted keys; timing goes to stderr only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from quadco import singer, steenrod
from quadco.errors import BadIndex, StepLimitExceeded
from quadco.verify import SUITES

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_LIMIT = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _dump(payload) -> None:
    print(json.dumps(payload, sort_keys=True, ensure_ascii=False))


def parse_window(text: str) -> tuple[int, int]:
    """'N' means -N..N; 'LO:HI' (or 'LO,HI') is taken literally."""
    for sep in (":", ","):
        if sep in text:
            lo, hi = text.split(sep, 1)
            return int(lo), int(hi)
    n = int(text)
    if n < 0:
        raise ValueError("window radius must be non-negative")
    return -n, n


def cmd_normalize(args) -> int:
    try:
        word = steenrod.parse_monomial(" ".join(args.monomial))
    except ValueError as exc:
        print(f"quadco normalize: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        if args.ring == "atilde":
            result = steenrod.atilde_normalize(word, args.strategy, args.max_steps)
            steps = None
        else:
            result, steps = steenrod.normalize(word, args.strategy, args.max_steps)
    except BadIndex as exc:
        print(f"quadco normalize: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except StepLimitExceeded as exc:
        print(f"quadco normalize: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    for line in result.lines():
        print(line)
    payload = {
        "command": "normalize",
        "input": list(word),
        "ring": args.ring,
        "strategy": args.strategy,
        "monomials": result.to_json(),
    }
    if steps is not None:
        payload["steps"] = steps
    _dump(payload)
    return EXIT_OK


def _table_rows(what: str, lo: int, hi: int) -> list[dict]:
    rows = []
    for i in range(lo, hi + 1):
        for j in range(lo, hi + 1):
            if not singer.in_s((i, j)):
                continue
            if what == "f":
                value = [{"key": [l, m], "value": 1} for l, m in sorted(singer.f_row_support((i, j))) if singer.f_gamma((i, j), (l, m))]
            elif what == "support":
                value = [[l, m] for l, m in sorted(singer.f_row_support((i, j)))]
            else:
                image = singer.h_image(i, j)
                value = {"text": image.to_text(singer.XY_NAMES), "terms": image.to_json(singer.XY_NAMES)}
            rows.append({"key": [i, j], "value": value})
    return rows


def cmd_table(args) -> int:
    lo, hi = args.window
    _dump({"command": "table", "what": args.what, "window": [lo, hi], "table": _table_rows(args.what, lo, hi)})
    return EXIT_OK


SUITE_PARAMS = {
    "selfdual": {"window": 15},
    "copbw": {"n": 4, "dmax": 40},
    "quadratic": {"n": 4, "dmax": 25},
    "milnor": {"n": 5},
    "comonoid": {"n": 5},
    "adem": {"window": 12, "samples": 1000, "seed": 0},
    "reciprocity": {"window": 10, "samples": 20, "seed": 0},
    "pairing": {"window": 15},
    "perp": {"samples": 50, "seed": 0},
    "foracle": {"max_excess": 24, "max_abs_j": 8},
}


def cmd_verify(args) -> int:
    params = dict(SUITE_PARAMS[args.suite])
    overrides = {"window": args.window, "n": args.n, "dmax": args.dmax, "samples": args.samples, "seed": args.seed}
    for key, value in overrides.items():
        if value is not None:
            if key not in params:
                print(f"quadco verify: --{key} does not apply to suite {args.suite}", file=sys.stderr)
                return EXIT_USAGE
            params[key] = value
    start = time.perf_counter()
    checks = SUITES[args.suite](**params)
    elapsed = time.perf_counter() - start
    passed = all(c.ok for c in checks)
    _dump({
        "command": "verify",
        "suite": args.suite,
        "params": params,
        "pass": passed,
        "checks": [c.to_json() for c in checks],
    })
    print(f"verify {args.suite}: {'pass' if passed else 'FAIL'} in {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if passed else EXIT_MISMATCH


def _window_arg(text: str):
    try:
        return parse_window(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _radius_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="quadco", description="Quadratic coalgebras over F2, Singer's bialgebra and Adem rewriting.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("normalize", help="admissible normal form of a word in the y_i")
    p.add_argument("monomial", nargs="+", help='e.g. "y2 y2" or y-1 y3')
    p.add_argument("--strategy", choices=["leftmost", "rightmost"], default="leftmost")
    p.add_argument("--ring", choices=["q", "atilde"], default="q")
    p.add_argument("--max-steps", type=_radius_arg, default=steenrod.DEFAULT_MAX_STEPS)
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("table", help="tables of f, h-images or row supports")
    p.add_argument("--what", choices=["f", "h", "support"], required=True)
    p.add_argument("--window", type=_window_arg, default=(-15, 15), help="N for -N..N, or LO:HI")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification battery")
    p.add_argument("suite", choices=sorted(SUITES))
    p.add_argument("--window", type=_radius_arg)
    p.add_argument("--n", type=_radius_arg)
    p.add_argument("--dmax", type=_radius_arg)
    p.add_argument("--samples", type=_radius_arg)
    p.add_argument("--seed", type=int)
    p.add_argument("--threads", type=int, default=1, help="accepted for compatibility; runs single-threaded")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
