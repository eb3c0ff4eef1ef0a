"""Table of i_I for named families, DP next to the oracle."""

import argparse

from italian_block.dp import solve
from italian_block.generator import family
from italian_block.oracle import brute_force


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max", type=int, default=12, help="largest family parameter")
    args = ap.parse_args()
    print(f"{'family':<12} {'k':>3} {'n':>3} {'dp':>3} {'oracle':>6}")
    bad = 0
    for name in ("complete", "star", "path", "caterpillar"):
        for k in range(1, args.max + 1):
            g = family(name, k)
            if g.n > 16:
                break
            a, b = solve(g).number, brute_force(g).number
            bad += a != b
            print(f"{name:<12} {k:>3} {g.n:>3} {a:>3} {b:>6}{'  MISMATCH' if a != b else ''}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
