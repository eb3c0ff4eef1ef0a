"""Command line: solve, check, oracle, gen, fuzz, bench.

Exit codes: 0 ok, 1 input/parse error, 2 not a block graph, 3 invalid
assignment, 4 oracle cap exceeded, 5 fuzz mismatch, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Optional, Sequence

from . import dp, harness
from .blockcut import NotBlockGraphError
from .generator import GenParams, random_block_graph
from .graph import (Graph, GraphFormatError, format_assignment, format_graph,
                    is_independent_italian, parse_assignment, parse_graph)
from .oracle import DEFAULT_CAP, OracleCapError, brute_force

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_NOT_BLOCK = 2
EXIT_INVALID = 3
EXIT_CAP = 4
EXIT_MISMATCH = 5
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage, which would collide with "not a block graph"
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


class InputError(Exception):
    pass


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    try:
        return parse_graph(text)
    except GraphFormatError as exc:
        raise InputError(f"{path}: {exc}") from None


def _summary(g: Graph) -> dict:
    return {"n": g.n, "m": g.m, "components": len(g.components())}


def _emit(report: dict, as_json: bool, lines: Sequence[str]) -> None:
    if as_json:
        print(json.dumps(report, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_solve(args) -> int:
    g = _read_graph(args.file)
    start = time.perf_counter()
    try:
        res = dp.solve(g, want_certificate=args.certificate)
    except NotBlockGraphError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_NOT_BLOCK
    elapsed_ms = (time.perf_counter() - start) * 1000
    report = {"command": "solve", **_summary(g), "i_I": res.number,
              "elapsed_ms": round(elapsed_ms, 3)}
    lines = [f"i_I = {res.number}"]
    if args.certificate:
        report["certificate"] = res.certificate
        check = is_independent_italian(g, res.certificate)
        lines.append("certificate: " + format_assignment(res.certificate).strip())
        lines.append(f"check: {'valid' if check else check.violation}, weight {sum(res.certificate)}")
    _emit(report, args.json, lines)
    return EXIT_OK


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    try:
        a = parse_assignment(Path(args.assignment).read_text())
    except OSError as exc:
        raise InputError(f"{args.assignment}: {exc.strerror}") from None
    except GraphFormatError as exc:
        raise InputError(f"{args.assignment}: {exc}") from None
    if len(a) != g.n:
        raise InputError(f"assignment has {len(a)} values, graph has {g.n} vertices")
    result = is_independent_italian(g, a)
    if not result:
        print(f"invalid: {result.violation}")
        return EXIT_INVALID
    print(f"valid, weight {sum(a)}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    g = _read_graph(args.file)
    try:
        res = brute_force(g, cap=args.cap)
    except OracleCapError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_CAP
    report = {"command": "oracle", **_summary(g), "i_I": res.number,
              "witness": list(res.witness), "explored": res.explored}
    _emit(report, args.json, [f"i_I = {res.number}",
                              "witness: " + format_assignment(res.witness).strip()])
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        g = random_block_graph(GenParams(args.blocks, args.max_clique, args.seed))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = f"# blocks={args.blocks} max_clique={args.max_clique} seed={args.seed}\n" + format_graph(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_fuzz(args) -> int:
    if args.iterations < 0 or args.max_blocks < 1 or args.max_clique < 2 or args.workers < 1:
        raise UsageError("iterations >= 0, max-blocks >= 1, max-clique >= 2, workers >= 1 required")
    start = time.perf_counter()
    report = harness.run_fuzz(args.iterations, args.max_blocks, args.max_clique, args.seed,
                              workers=args.workers, out_dir=Path(args.out_dir), solver=dp.solve)
    elapsed_ms = (time.perf_counter() - start) * 1000
    out = {"command": "fuzz", "iterations": report.iterations, "agree": report.agree,
           "seed": args.seed, "elapsed_ms": round(elapsed_ms, 3)}
    lines = [f"{report.agree}/{report.iterations} agree"]
    if not report.ok:
        first = report.failures[0]
        out["reproducer"] = str(report.reproducer)
        out["first_failure"] = {"index": first.index, "error": first.error}
        lines.append(f"first failure: case {first.index}: {first.error}")
        lines.append(f"reproducer: {report.reproducer}")
    _emit(out, args.json, lines)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def _sizes(text: str) -> list[int]:
    try:
        sizes = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise UsageError(f"bad --sizes {text!r}") from None
    if not sizes or min(sizes) < 2:
        raise UsageError("--sizes needs integers >= 2")
    return sizes


def cmd_bench(args) -> int:
    sizes = _sizes(args.sizes)
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise UsageError("--sizes must be strictly ascending")
    rows = harness.run_bench(sizes, args.max_clique, args.seed, args.repeat)
    report = {"command": "bench", "rows": [
        {"n": r.n, "m": r.m, "ms": round(r.seconds * 1000, 3),
         "ratio": None if r.ratio is None else round(r.ratio, 3)} for r in rows]}
    lines = [f"{'n':>9} {'m':>9} {'ms':>10} {'ratio':>6}"]
    for r in rows:
        ratio = "" if r.ratio is None else f"{r.ratio:.2f}"
        lines.append(f"{r.n:>9} {r.m:>9} {r.seconds * 1000:>10.2f} {ratio:>6}")
    _emit(report, args.json, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="italian-block",
                 description="Independent Italian domination on block graphs.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="compute i_I of a block graph")
    p.add_argument("file")
    p.add_argument("--certificate", action="store_true", help="also print an optimal assignment")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="check an assignment")
    p.add_argument("graph")
    p.add_argument("assignment")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("oracle", help="exhaustive search on a small graph")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", help="write a random block graph")
    p.add_argument("--blocks", type=int, required=True)
    p.add_argument("--max-clique", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("fuzz", help="differential test against the oracle")
    p.add_argument("--iterations", type=int, required=True)
    p.add_argument("--max-blocks", type=int, required=True)
    p.add_argument("--max-clique", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out-dir", default=".", help="where a failing instance is written")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("bench", help="time solve on growing generated graphs")
    p.add_argument("--sizes", required=True, help="comma-separated ascending vertex counts")
    p.add_argument("--max-clique", type=int, default=4)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
