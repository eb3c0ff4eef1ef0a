"""Differential fuzzing against the oracle, and timing runs."""

from __future__ import annotations

import gc
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Optional

from . import dp
from .generator import GenParams, SplitMix64, random_block_graph
from .graph import Graph, format_graph, is_independent_italian
from .oracle import brute_force


def fuzz_params(iterations: int, max_blocks: int, max_clique: int, seed: int) -> list[GenParams]:
    """Instance parameters for a fuzz run.

    A SplitMix64 stream seeded with ``seed`` yields, per instance, the block
    count ``randint(1, max_blocks)`` and then the instance seed ``next()``.
    Instance ``i`` therefore replays without running instances ``0..i-1``'s solvers.
    """
    rng = SplitMix64(seed)
    out = []
    for _ in range(iterations):
        nb = rng.randint(1, max_blocks)
        out.append(GenParams(nb, max_clique, rng.next()))
    return out


@dataclass
class CaseResult:
    index: int
    params: GenParams
    n: int
    dp_number: Optional[int]
    oracle_number: int
    ok: bool
    error: str = ""


def check_instance(index: int, p: GenParams,
                   solver: Callable[[Graph, bool], dp.SolveResult] = dp.solve) -> CaseResult:
    g = random_block_graph(p)
    oracle = brute_force(g, cap=g.n)
    try:
        plain = solver(g, False)
        full = solver(g, True)
    except Exception as exc:  # a crashing solver is a mismatch, not a harness failure
        return CaseResult(index, p, g.n, None, oracle.number, False, f"{type(exc).__name__}: {exc}")
    problems = []
    if plain.number != oracle.number:
        problems.append(f"dp {plain.number} != oracle {oracle.number}")
    if full.number != plain.number:
        problems.append(f"traced run gave {full.number}")
    cert = full.certificate
    if cert is None or not is_independent_italian(g, cert):
        problems.append("certificate rejected by checker")
    elif sum(cert) != full.number:
        problems.append(f"certificate weight {sum(cert)}")
    return CaseResult(index, p, g.n, plain.number, oracle.number, not problems, "; ".join(problems))


def _check_star(args):
    return check_instance(*args)


@dataclass
class FuzzReport:
    iterations: int
    agree: int
    failures: list[CaseResult] = field(default_factory=list)
    reproducer: Optional[Path] = None

    @property
    def ok(self) -> bool:
        return not self.failures


def run_fuzz(iterations: int, max_blocks: int, max_clique: int, seed: int,
             workers: int = 1, out_dir: Path = Path("."),
             solver: Callable[[Graph, bool], dp.SolveResult] = dp.solve) -> FuzzReport:
    """Generate instances, compare DP against the oracle, dump the first failure."""
    params = fuzz_params(iterations, max_blocks, max_clique, seed)
    jobs = [(i, p) for i, p in enumerate(params)]
    if workers > 1 and solver is dp.solve:
        with ProcessPoolExecutor(workers) as pool:
            results = list(pool.map(_check_star, jobs, chunksize=64))
    else:
        results = [check_instance(i, p, solver) for i, p in jobs]
    failures = [r for r in results if not r.ok]
    report = FuzzReport(iterations, len(results) - len(failures), failures)
    if failures:
        report.reproducer = dump_reproducer(failures[0], seed, out_dir)
    return report


def dump_reproducer(case: CaseResult, seed: int, out_dir: Path) -> Path:
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"fuzz_fail_seed{seed}_case{case.index}.txt"
    g = random_block_graph(case.params)
    meta = {
        "fuzz_seed": seed,
        "index": case.index,
        "num_blocks": case.params.num_blocks,
        "max_clique": case.params.max_clique,
        "instance_seed": case.params.seed,
        "dp": case.dp_number,
        "oracle": case.oracle_number,
        "error": case.error,
    }
    path.write_text(f"# {json.dumps(meta, sort_keys=True)}\n" + format_graph(g))
    return path


def block_graph_of_size(n: int, max_clique: int, seed: int) -> Graph:
    """Generator stream continued until at least ``n`` vertices exist."""
    # mirrors the draws of random_block_graph: size, then shared vertex
    rng = SplitMix64(seed)
    count = rng.randint(2, max_clique)
    blocks = 1
    while count < n:
        count += rng.randint(2, max_clique) - 1
        rng.next()
        blocks += 1
    return random_block_graph(GenParams(blocks, max_clique, seed))


@dataclass
class BenchRow:
    n: int
    m: int
    seconds: float
    ratio: Optional[float]


def _timed_solve(g: Graph) -> float:
    gc.collect()
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        start = time.perf_counter()
        dp.solve(g)
        return time.perf_counter() - start
    finally:
        if was_enabled:
            gc.enable()


def time_solve(g: Graph, repeat: int = 3) -> float:
    """Best-of-``repeat`` wall time of ``dp.solve`` with the collector paused, as timeit does."""
    return min(_timed_solve(g) for _ in range(repeat))


def time_interleaved(graphs: list[Graph], repeat: int = 3) -> list[float]:
    """Best-of-``repeat`` times for several graphs, one round over all graphs at a time.

    Interleaving keeps slow drift in machine state (frequency, other load)
    from landing on one size only, which matters when comparing sizes.
    """
    best = [float("inf")] * len(graphs)
    for _ in range(repeat):
        for i, g in enumerate(graphs):
            best[i] = min(best[i], _timed_solve(g))
    return best


def run_bench(sizes: list[int], max_clique: int = 4, seed: int = 1, repeat: int = 3) -> list[BenchRow]:
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("sizes must be strictly ascending")
    graphs = [block_graph_of_size(n, max_clique, seed) for n in sizes]
    times = time_interleaved(graphs, repeat)
    rows: list[BenchRow] = []
    for g, secs in zip(graphs, times):
        ratio = secs / rows[-1].seconds if rows else None
        rows.append(BenchRow(g.n, g.m, secs, ratio))
    return rows

