"""Simple undirected graphs, assignments, and the independent Italian checker."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int]


class GraphFormatError(ValueError):
    """Malformed edge-list or assignment text. ``line`` is 1-based (0 if unknown)."""

    def __init__(self, message: str, line: int = 0):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph over vertices ``0..n-1``.

    ``edges`` holds each edge once as ``(min, max)``, sorted. ``adj`` holds
    sorted neighbor tuples.
    """

    n: int
    edges: tuple[Edge, ...]
    adj: tuple[tuple[int, ...], ...] = field(repr=False, compare=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen: set[Edge] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        adj: list[list[int]] = [[] for _ in range(n)]
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return cls(n, tuple(sorted(seen)), tuple(tuple(a) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        a, b = self.adj[u], self.adj[v]
        # scan the shorter list; block graphs keep these small
        if len(a) > len(b):
            u, v, a = v, u, b
        return v in a

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by smallest vertex."""
        comp = [-1] * self.n
        out: list[list[int]] = []
        for s in range(self.n):
            if comp[s] != -1:
                continue
            comp[s] = len(out)
            stack, members = [s], [s]
            while stack:
                v = stack.pop()
                for w in self.adj[v]:
                    if comp[w] == -1:
                        comp[w] = len(out)
                        stack.append(w)
                        members.append(w)
            members.sort()
            out.append(members)
        return out

    def subgraph(self, vertices: Sequence[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph relabelled to ``0..k-1``; also returns the new->old map."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [
            (index[u], index[v])
            for u in vertices
            for v in self.adj[u]
            if u < v and v in index
        ]
        return Graph.from_edges(len(vertices), edges), list(vertices)


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: ``#`` comments, header ``n m``, then ``m`` lines ``u v``."""
    header: Optional[tuple[int, int]] = None
    edges: list[Edge] = []
    where: dict[Edge, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) != 2:
            raise GraphFormatError(f"expected 2 integers, got {len(tokens)} tokens", lineno)
        try:
            a, b = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"non-integer token in {line!r}", lineno) from None
        if header is None:
            if a < 0 or b < 0:
                raise GraphFormatError("header values must be nonnegative", lineno)
            header = (a, b)
            continue
        n = header[0]
        if len(edges) == header[1]:
            raise GraphFormatError(f"more than {header[1]} edge lines", lineno)
        if not (0 <= a < n and 0 <= b < n):
            raise GraphFormatError(f"vertex id out of range [0, {n})", lineno)
        if a == b:
            raise GraphFormatError(f"self-loop at vertex {a}", lineno)
        e = (a, b) if a < b else (b, a)
        if e in where:
            raise GraphFormatError(f"duplicate edge {e} (first on line {where[e]})", lineno)
        where[e] = lineno
        edges.append(e)
    if header is None:
        raise GraphFormatError("missing 'n m' header")
    if len(edges) != header[1]:
        raise GraphFormatError(f"header declares {header[1]} edges, found {len(edges)}")
    return Graph.from_edges(header[0], edges)


def format_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_assignment(text: str) -> tuple[int, ...]:
    values = []
    for tok in text.split():
        if tok not in ("0", "1", "2"):
            raise GraphFormatError(f"assignment value {tok!r} not in {{0,1,2}}", 1)
        values.append(int(tok))
    return tuple(values)


def format_assignment(a: Sequence[int]) -> str:
    return " ".join(map(str, a)) + "\n"


def assignment_weight(a: Sequence[int]) -> int:
    return sum(a)


@dataclass(frozen=True)
class Violation:
    """First reason an assignment fails to be an independent Italian dominating function."""

    kind: str  # "undominated" or "not_independent"
    vertex: Optional[int] = None
    edge: Optional[Edge] = None
    detail: str = ""

    def __str__(self) -> str:
        if self.kind == "undominated":
            return f"vertex {self.vertex} undominated: {self.detail}"
        return f"edge {self.edge} joins two nonzero vertices: {self.detail}"


@dataclass(frozen=True)
class CheckResult:
    ok: bool
    violation: Optional[Violation] = None

    def __bool__(self) -> bool:
        return self.ok


def is_independent_italian(g: Graph, a: Sequence[int]) -> CheckResult:
    """Check ``a`` is an independent Italian dominating function of ``g``.

    Independence is checked over edges in sorted order first, then the
    domination condition over vertices in id order; the first failure is
    reported.
    """
    if len(a) != g.n:
        raise ValueError(f"assignment has length {len(a)}, graph has {g.n} vertices")
    for x in a:
        if x not in (0, 1, 2):
            raise ValueError(f"assignment value {x!r} not in {{0,1,2}}")
    for u, v in g.edges:
        if a[u] and a[v]:
            return CheckResult(False, Violation(
                "not_independent", edge=(u, v), detail=f"f({u})={a[u]}, f({v})={a[v]}"))
    for v in range(g.n):
        if a[v] == 0:
            s = sum(a[u] for u in g.adj[v])
            if s < 2:
                return CheckResult(False, Violation(
                    "undominated", vertex=v, detail=f"neighbor sum {s} < 2"))
    return CheckResult(True)


def greedy_mis(g: Graph) -> list[int]:
    """Lowest-id-first greedy maximal independent set."""
    blocked = [False] * g.n
    out = []
    for v in range(g.n):
        if not blocked[v]:
            out.append(v)
            blocked[v] = True
            for w in g.adj[v]:
                blocked[w] = True
    return out


def greedy_mis_bound(g: Graph) -> int:
    """Upper bound on i_I: value 2 on a maximal independent set is always valid."""
    return 2 * len(greedy_mis(g))
