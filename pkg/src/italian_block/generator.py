"""Seeded block-graph generator and named graph families.

Randomness comes from SplitMix64 so a (params, seed) pair gives the same
graph on every platform and in any language that implements the same
steps:

    state <- seed mod 2**64
    next():  state += 0x9E3779B97F4A7C15; z = state
             z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
             z = (z ^ (z >> 27)) * 0x94D049BB133111EB
             return z ^ (z >> 31)                      (all mod 2**64)
    randint(lo, hi) = lo + next() mod (hi - lo + 1)

``random_block_graph`` draws, in this order: the first block size
``randint(2, max_clique)``; then for each further block its size
``randint(2, max_clique)`` followed by the shared vertex ``randint(0, n-1)``
where ``n`` is the current vertex count. New vertices get the next ids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph

MASK64 = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Integer in ``[lo, hi]``; modulo reduction, bias below 2**-40 for small ranges."""
        return lo + self.next() % (hi - lo + 1)


@dataclass(frozen=True)
class GenParams:
    num_blocks: int
    max_clique: int
    seed: int

    def __post_init__(self):
        if self.num_blocks < 1:
            raise ValueError("num_blocks must be positive")
        if self.max_clique < 2:
            raise ValueError("max_clique must be at least 2")


def random_block_graph(p: GenParams) -> Graph:
    """Connected block graph with exactly ``p.num_blocks`` blocks."""
    rng = SplitMix64(p.seed)
    size = rng.randint(2, p.max_clique)
    edges = list(itertools.combinations(range(size), 2))
    n = size
    for _ in range(p.num_blocks - 1):
        size = rng.randint(2, p.max_clique)
        shared = rng.randint(0, n - 1)
        clique = [shared, *range(n, n + size - 1)]
        edges.extend(itertools.combinations(clique, 2))
        n += size - 1
    return Graph.from_edges(n, edges)


def family(name: str, k: int) -> Graph:
    """Named fixture graphs.

    ``path``: P_k; ``star``: K_{1,k} with centre 0; ``complete``: K_k;
    ``caterpillar``: k triangles in a chain, triangle i on vertices 2i, 2i+1, 2i+2.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if name == "path":
        return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])
    if name == "star":
        return Graph.from_edges(k + 1, [(0, i) for i in range(1, k + 1)])
    if name == "complete":
        return Graph.from_edges(k, itertools.combinations(range(k), 2))
    if name == "caterpillar":
        edges = []
        for i in range(k):
            a = 2 * i
            edges += [(a, a + 1), (a, a + 2), (a + 1, a + 2)]
        return Graph.from_edges(2 * k + 1, edges)
    raise ValueError(f"unknown family {name!r}; expected path, star, complete or caterpillar")
