"""Exhaustive ground truth for small graphs of any kind."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graph import Graph, is_independent_italian

DEFAULT_CAP = 16
FULL_ENUM_MAX = 8


class OracleCapError(ValueError):
    pass


@dataclass(frozen=True)
class OracleResult:
    number: int
    witness: tuple[int, ...]
    explored: int


def brute_force(g: Graph, cap: int = DEFAULT_CAP) -> OracleResult:
    """Minimum-weight independent Italian dominating function by search.

    Vertices are decided in id order; 1 and 2 are only tried on vertices with
    no nonzero earlier neighbour, so every support is independent. A vertex
    is checked for domination once its last neighbour is decided. Among the
    optima the lexicographically smallest is returned.
    """
    n = g.n
    if n > cap:
        raise OracleCapError(f"graph has {n} vertices, oracle cap is {cap}")
    adj = g.adj
    earlier = [[u for u in adj[v] if u < v] for v in range(n)]
    # vertices whose neighbourhood is fully decided after deciding vertex i
    settle: list[list[int]] = [[] for _ in range(n)]
    for v in range(n):
        settle[max([v, *adj[v]])].append(v)

    f = [0] * n
    best_w = 2 * n + 1
    best: list[int] = []
    explored = 0

    def settled_ok(i: int) -> bool:
        for v in settle[i]:
            if f[v] == 0 and sum(f[u] for u in adj[v]) < 2:
                return False
        return True

    # iterative DFS over (vertex, next value to try)
    i, w = 0, 0
    tries = [0] * (n + 1)
    if n == 0:
        return OracleResult(0, (), 1)
    while i >= 0:
        if i == n:
            explored += 1
            if w < best_w:
                best_w, best = w, f[:]
            i -= 1
            w -= f[i]
            continue
        val = tries[i]
        if val > 2:
            tries[i] = 0
            f[i] = 0
            i -= 1
            if i >= 0:
                w -= f[i]
            continue
        tries[i] = val + 1
        if val and (w + val >= best_w or any(f[u] for u in earlier[i])):
            continue
        f[i] = val
        w += val
        if settled_ok(i):
            i += 1
        else:
            w -= val
            f[i] = 0
    return OracleResult(best_w, tuple(best), explored)


def full_enumeration(g: Graph) -> OracleResult:
    """All 3^n assignments through the checker; the sanity anchor for ``brute_force``."""
    if g.n > FULL_ENUM_MAX:
        raise OracleCapError(f"full enumeration limited to {FULL_ENUM_MAX} vertices")
    best = None
    explored = 0
    for a in itertools.product((0, 1, 2), repeat=g.n):
        explored += 1
        if is_independent_italian(g, a) and (best is None or sum(a) < sum(best)):
            best = a
    assert best is not None
    return OracleResult(sum(best), best, explored)
