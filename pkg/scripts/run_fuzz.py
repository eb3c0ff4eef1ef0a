"""Differential run of the DP against the oracle; writes a JSON summary."""

import argparse
import json
import time
from pathlib import Path

from italian_block.harness import run_fuzz


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--iterations", type=int, default=1000)
    ap.add_argument("--max-blocks", type=int, default=6)
    ap.add_argument("--max-clique", type=int, default=4)
    ap.add_argument("--seed", type=int, default=42)
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", type=Path, default=Path("results/fuzz.json"))
    args = ap.parse_args()

    start = time.perf_counter()
    rep = run_fuzz(args.iterations, args.max_blocks, args.max_clique, args.seed,
                   workers=args.workers, out_dir=args.out.parent)
    elapsed = time.perf_counter() - start
    summary = {
        "iterations": rep.iterations, "agree": rep.agree, "seed": args.seed,
        "max_blocks": args.max_blocks, "max_clique": args.max_clique,
        "seconds": round(elapsed, 3),
        "failures": [{"index": f.index, "error": f.error} for f in rep.failures],
        "reproducer": str(rep.reproducer) if rep.reproducer else None,
    }
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(summary, indent=2) + "\n")
    print(f"{rep.agree}/{rep.iterations} agree in {elapsed:.1f}s -> {args.out}")
    return 0 if rep.ok else 5


if __name__ == "__main__":
    raise SystemExit(main())
