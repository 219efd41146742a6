"""Command-line interface.

Exit codes: 0 on success, 2 on invalid input, 3 when a resource guard
trips.  Resource guards can be overridden with environment variables
(see _GUARD_ENV below; invalid values are rejected).
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from typing import Optional

from . import distributions, insertions, oracle, render, sampler, selfcheck, words

_GUARD_ENV = {
    "enum_max_n": "BILLIARDKNOTS_MAX_ENUM_N",  # exact enumeration length
    "ins_max_len": "BILLIARDKNOTS_MAX_WORD_LEN",  # insertion base length
    "ins_max_m": "BILLIARDKNOTS_MAX_INSERTIONS",  # insertion count
    "term_max_len": "BILLIARDKNOTS_MAX_TERMINAL_LEN",  # confluence audit length
}
_GUARD_DEFAULTS = {
    "enum_max_n": 22,
    "ins_max_len": 8,
    "ins_max_m": 4,
    "term_max_len": 13,
}

# exact pmf is cheap enough below this length to compute alongside a sample
_SAMPLE_EXACT_LIMIT = 60


def _guards() -> dict[str, int]:
    values = dict(_GUARD_DEFAULTS)
    for key, env in _GUARD_ENV.items():
        raw = os.environ.get(env)
        if raw is not None:
            try:
                values[key] = int(raw)
            except ValueError:
                raise ValueError(f"{env} must be an integer, got {raw!r}") from None
    return values


def _mode(args) -> str:
    return words.CHIRAL if getattr(args, "chiral", False) else words.MIRROR_IDENTIFIED


def _emit(args, payload: dict, text: str, rows: Optional[list] = None,
          header: Optional[tuple] = None) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout)
        if rows is None:
            for key in sorted(payload):
                writer.writerow([key, payload[key]])
        else:
            if header:
                writer.writerow(header)
            writer.writerows(rows)
    else:
        print(text)


def _cmd_reduce(args) -> None:
    terminal = words.reduce(args.word)
    payload = {"word": args.word, "reduced": terminal,
               "crossing_number": words.crossing_number(args.word)}
    _emit(args, payload, terminal)


def _cmd_moves(args) -> None:
    moves = words.available_moves(args.word)
    payload = {
        "word": args.word,
        "moves": [
            {"kind": mv.kind, "position": mv.position, "triple": mv.deleted_triple}
            for mv in moves
        ],
    }
    lines = [f"{mv.kind}@{mv.position}: {mv.deleted_triple}" for mv in moves]
    rows = [(mv.kind, mv.position, mv.deleted_triple) for mv in moves]
    _emit(args, payload, "\n".join(lines) if lines else "(no moves)",
          rows, ("kind", "position", "triple"))


def _cmd_class(args) -> None:
    cls = words.knot_class(args.word, _mode(args))
    text = (
        f"canonical {cls.canonical or '(empty)'}  ell0={cls.ell0} ell1={cls.ell1} "
        f"r={cls.multiplicity_r} c={cls.crossing_number}"
        + ("  [unknot]" if cls.is_unknot else "")
    )
    _emit(args, cls.to_json(), text)


def _cmd_prob(args) -> None:
    cls = words.knot_class(args.word, _mode(args))
    p = distributions.knot_probability(cls, args.n)
    payload = {"word": args.word, "n": args.n, "canonical": cls.canonical,
               "probability": str(p), "float": float(p)}
    _emit(args, payload, f"{p} = {float(p):.6g}")


def _cmd_pmf(args) -> None:
    pmf = distributions.crossing_pmf(args.n)
    lines = [f"c=0 (unknot): {pmf.unknot_mass} = {float(pmf.unknot_mass):.6g}"]
    for c in sorted(pmf.masses):
        p = pmf.masses[c]
        lines.append(f"c={c}: {p} = {float(p):.6g}")
    _emit(args, pmf.to_json(), "\n".join(lines), pmf.to_csv_rows(),
          ("c", "numerator", "denominator", "float"))


def _cmd_rate(args) -> None:
    cls = words.knot_class(args.word, _mode(args))
    report = distributions.alpha_rate(cls, args.n)
    payload = {"word": args.word, "n": report.n, "log2_rate": report.log2_rate,
               "target": report.target, "gap": report.gap}
    _emit(args, payload,
          f"log2 rate {report.log2_rate:.6f}  target {report.target:.6f}  "
          f"gap {report.gap:.6f}")


def _cmd_enumerate(args, guards) -> None:
    dist = oracle.exact_distribution(args.n, _mode(args), max_n=guards["enum_max_n"])
    lines = [f"n={dist.n} total={dist.total}"]
    for canonical in sorted(dist.counts, key=lambda u: (len(u), u)):
        cls = dist.classes[canonical]
        lines.append(
            f"{canonical or '(empty)':>{max(args.n, 7)}}  count={dist.counts[canonical]}"
            f"  c={cls.crossing_number}"
        )
    rows = [
        (canonical, dist.counts[canonical], dist.classes[canonical].crossing_number)
        for canonical in sorted(dist.counts, key=lambda u: (len(u), u))
    ]
    _emit(args, dist.to_json(), "\n".join(lines), rows, ("canonical", "count", "c"))


def _cmd_insertions(args, guards) -> None:
    scope = oracle.INTERNAL_ONLY if args.internal_only else oracle.ALL
    found = oracle.enumerate_insertions(
        args.word, args.m, scope,
        max_len=guards["ins_max_len"], max_insertions=guards["ins_max_m"],
    )
    ordered = sorted(found)
    payload = {"word": args.word, "m": args.m, "scope": scope,
               "count": len(ordered), "words": ordered}
    text = "\n".join(ordered + [f"({len(ordered)} words)"])
    _emit(args, payload, text, [(u,) for u in ordered], ("word",))


def _cmd_trace(args) -> None:
    locs = tuple(int(x) for x in args.locations.split(",") if x.strip() != "")
    trace = insertions.reconstruct(args.word, args.m, locs)
    width = max(len(s.stack) for s in trace.steps) if trace.steps else 1
    lines = [f"{'i':>3} | L | {'word':<{len(trace.steps)}} | stack"]
    for step in trace.steps:
        written = "".join(s.letter for s in trace.steps[: step.index])
        lines.append(
            f"{step.index:>3} | {'x' if step.in_locations else ' '} | "
            f"{written:<{len(trace.steps)}} | {step.stack:>{width}}"
        )
    lines.append(f"result: {'success ' + trace.word if trace.success else 'failure'}")
    _emit(args, trace.to_json(), "\n".join(lines))


def _cmd_sample(args) -> None:
    exact = None
    if args.n <= _SAMPLE_EXACT_LIMIT:
        exact = distributions.crossing_pmf(args.n)
    report = sampler.sample_pmf(args.n, args.count, args.seed,
                                workers=args.workers, exact=exact)
    lines = [f"n={report.n} count={report.sample_count} seed={report.seed} "
             f"workers={report.workers}"]
    for c, freq in report.empirical.items():
        lines.append(f"c={c}: {freq:.6f}")
    if report.tv_distance_to_exact is not None:
        lines.append(f"tv distance to exact: {report.tv_distance_to_exact:.6f}")
    rows = [(c, report.counts[c], freq) for c, freq in report.empirical.items()]
    _emit(args, report.to_json(), "\n".join(lines), rows, ("c", "count", "frequency"))


def _cmd_render(args) -> None:
    svg = render.render_svg(args.word, flip_crossings=args.flip_crossings)
    with open(args.out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    _emit(args, {"word": args.word, "out": args.out, "bytes": len(svg)},
          f"wrote {args.out} ({len(svg)} bytes)")


def _cmd_selfcheck(args) -> int:
    results = selfcheck.run_selfcheck(deep=args.deep)
    failures = 0
    for name, ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'}  {name}: {detail}")
        failures += 0 if ok else 1
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="billiardknots",
        description="Random two-bridge knots as binary words on billiard tables.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json", "csv"), default="text")
    chiral = argparse.ArgumentParser(add_help=False)
    chiral.add_argument("--chiral", action="store_true",
                        help="distinguish mirror images")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", parents=[common], help="fully reduce a word")
    p.add_argument("word")

    p = sub.add_parser("moves", parents=[common], help="list legal reduction moves")
    p.add_argument("word")

    p = sub.add_parser("class", parents=[common, chiral],
                       help="knot class of a word")
    p.add_argument("word")

    p = sub.add_parser("prob", parents=[common, chiral],
                       help="exact probability of the word's knot at length n")
    p.add_argument("word")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("pmf", parents=[common],
                       help="exact crossing-number distribution at length n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("rate", parents=[common, chiral],
                       help="per-crossing log-probability against the limit rate")
    p.add_argument("--word", required=True)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("enumerate", parents=[common, chiral],
                       help="exhaustive knot counts over all words of length n")
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("insertions", parents=[common],
                       help="enumerate all words reachable by m insertions")
    p.add_argument("word")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--internal-only", action="store_true")

    p = sub.add_parser("trace", parents=[common],
                       help="run the reconstruction stack on a location set")
    p.add_argument("word")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--locations", default="",
                   help="comma-separated locations, empty for none")

    p = sub.add_parser("sample", parents=[common],
                       help="Monte Carlo crossing-number histogram")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("render", parents=[common],
                       help="draw the billiard-table diagram as SVG")
    p.add_argument("word")
    p.add_argument("--out", required=True)
    p.add_argument("--flip-crossings", action="store_true",
                   help="invert the letter-to-crossing convention")

    p = sub.add_parser("selfcheck", parents=[common],
                       help="run built-in consistency checks")
    p.add_argument("--deep", action="store_true")

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        guards = _guards()
        if args.command == "reduce":
            _cmd_reduce(args)
        elif args.command == "moves":
            _cmd_moves(args)
        elif args.command == "class":
            _cmd_class(args)
        elif args.command == "prob":
            _cmd_prob(args)
        elif args.command == "pmf":
            _cmd_pmf(args)
        elif args.command == "rate":
            _cmd_rate(args)
        elif args.command == "enumerate":
            _cmd_enumerate(args, guards)
        elif args.command == "insertions":
            _cmd_insertions(args, guards)
        elif args.command == "trace":
            _cmd_trace(args)
        elif args.command == "sample":
            _cmd_sample(args)
        elif args.command == "render":
            _cmd_render(args)
        elif args.command == "selfcheck":
            return _cmd_selfcheck(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except oracle.ResourceGuardError as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())
