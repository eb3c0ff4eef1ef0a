"""Biconnected decomposition and the block-cutpoint tree of a block graph.

The tree has one node per cut vertex and one node per block. A block node is
typed by how many of its members are *not* cut vertices:

    type 0  every member is a cut vertex
    type 1  exactly one uncut member
    type 2  two or more uncut members

Assignments on the graph map to the tree through ``induce`` (cut nodes keep
their value, a block node gets the total of its uncut members) and back
through ``realize``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .graph import Graph


class NotBlockGraphError(ValueError):
    """A biconnected component is not a clique."""

    def __init__(self, block: tuple[int, ...], missing: tuple[int, int]):
        self.block = block
        self.missing = missing
        super().__init__(
            f"not a block graph: block {{{','.join(map(str, block))}}} "
            f"is missing edge {missing}")


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    block_cuts: tuple[tuple[int, ...], ...]
    components: int = 1


def decompose(g: Graph) -> BlockDecomposition:
    """Blocks and articulation points of every component, by iterative DFS.

    Blocks are sorted vertex tuples listed in the order the search closes
    them (deterministic for a given graph). Isolated vertices become singleton blocks. ``components`` counts the
    connected components met on the way.
    """
    n = g.n
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    is_cut = [False] * n
    blocks: list[tuple[int, ...]] = []
    clock = 0
    components = 0
    for s in range(n):
        if disc[s] != -1:
            continue
        components += 1
        disc[s] = low[s] = clock
        clock += 1
        if not adj[s]:
            blocks.append((s,))
            continue
        root_children = 0
        vstack = [s]
        path = [s]
        iters = [iter(adj[s])]
        while iters:
            v = path[-1]
            up = path[-2] if len(path) > 1 else -1
            for w in iters[-1]:
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    vstack.append(w)
                    path.append(w)
                    iters.append(iter(adj[w]))
                    break
                if w != up and disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                iters.pop()
                path.pop()
                if not path:
                    break
                p = path[-1]
                if low[v] < low[p]:
                    low[p] = low[v]
                if low[v] >= disc[p]:
                    if p == s:
                        root_children += 1
                    else:
                        is_cut[p] = True
                    # pop the subtree hanging below p
                    k = len(vstack) - 1
                    while vstack[k] != v:
                        k -= 1
                    comp = vstack[k:]
                    del vstack[k:]
                    comp.append(p)
                    comp.sort()
                    blocks.append(tuple(comp))
        if root_children >= 2:
            is_cut[s] = True
    return BlockDecomposition(
        blocks=tuple(blocks),
        cut_vertices=frozenset(v for v in range(n) if is_cut[v]),
        block_cuts=tuple(tuple(v for v in b if is_cut[v]) for b in blocks),
        components=components,
    )


def find_non_clique(g: Graph, d: BlockDecomposition) -> Optional[tuple[tuple[int, ...], tuple[int, int]]]:
    """First block (in decomposition order) that is not complete, with one missing edge."""
    # each edge lies in exactly one block, so the edge total certifies every block at once
    if sum(len(b) * (len(b) - 1) // 2 for b in d.blocks) == g.m:
        return None
    edges = set(g.edges)
    for b in d.blocks:
        for i, u in enumerate(b):
            for v in b[i + 1:]:
                if (u, v) not in edges:
                    return b, (u, v)
    raise AssertionError("edge count mismatch without a missing block edge")


def validate_block_graph(g: Graph, d: BlockDecomposition) -> None:
    """Raise :class:`NotBlockGraphError` unless every block induces a clique."""
    bad = find_non_clique(g, d)
    if bad is not None:
        raise NotBlockGraphError(*bad)


@dataclass(frozen=True)
class BlockCutTree:
    """Rooted block-cutpoint tree.

    Nodes ``0..n_cuts-1`` are cut nodes in increasing vertex order; the rest are
    block nodes in decomposition order. ``btype`` is -1 for cut nodes.
    ``order`` lists every node after all of its children, root last.
    """

    is_cut: tuple[bool, ...]
    members: tuple[tuple[int, ...], ...]
    uncut: tuple[tuple[int, ...], ...]
    btype: tuple[int, ...]
    adj: tuple[tuple[int, ...], ...]
    root: int
    parent: tuple[int, ...]
    order: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.is_cut)

    @property
    def n_cuts(self) -> int:
        return sum(self.is_cut)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return [(x, y) for x in range(len(self)) for y in self.adj[x] if x < y]

    def vertex(self, node: int) -> int:
        """Graph vertex of a cut node."""
        assert self.is_cut[node]
        return self.members[node][0]

    def children(self, node: int) -> list[int]:
        return [y for y in self.adj[node] if self.parent[y] == node]

    def rerooted(self, root: int, rng: Optional[random.Random] = None) -> "BlockCutTree":
        """Same tree with a new root; ``rng`` shuffles the child visiting order."""
        parent, order = _orient(self.adj, root, rng)
        return BlockCutTree(self.is_cut, self.members, self.uncut, self.btype,
                            self.adj, root, parent, order)

    def dump(self) -> str:
        lines = []
        for x in range(len(self)):
            if self.is_cut[x]:
                lines.append(f"cut {self.members[x][0]}")
            else:
                lines.append(f"block {x} type {self.btype[x]} members "
                             + " ".join(map(str, self.members[x])))
        for x, y in self.edges:
            lines.append(f"edge {x} {y}")
        return "\n".join(lines) + "\n"


def _orient(adj: Sequence[Sequence[int]], root: int,
            rng: Optional[random.Random]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    n = len(adj)
    parent = [-1] * n
    seen = [False] * n
    seen[root] = True
    preorder = []
    stack = [root]
    while stack:
        x = stack.pop()
        preorder.append(x)
        nbrs = adj[x]
        if rng is not None:
            nbrs = list(nbrs)
            rng.shuffle(nbrs)
        for y in nbrs:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                stack.append(y)
    if len(preorder) != n:
        raise ValueError("block-cutpoint graph is disconnected")
    # reversed preorder puts every child before its parent
    preorder.reverse()
    return tuple(parent), tuple(preorder)


def build_tree(g: Graph, d: BlockDecomposition, root: Optional[int] = None,
               rng: Optional[random.Random] = None) -> BlockCutTree:
    """Block-cutpoint tree of a connected block graph with at least one cut vertex.

    Rooted at the highest-numbered cut vertex unless ``root`` (a node id) is given.
    """
    if not d.cut_vertices:
        raise ValueError("graph has no cut vertex; use the complete-graph shortcut")
    cuts = sorted(d.cut_vertices)
    node_of = [-1] * g.n
    for i, v in enumerate(cuts):
        node_of[v] = i
    k = len(cuts)
    is_cut = [True] * k + [False] * len(d.blocks)
    members: list[tuple[int, ...]] = [(v,) for v in cuts]
    uncut: list[tuple[int, ...]] = [() for _ in cuts]
    btype = [-1] * k
    adj: list[list[int]] = [[] for _ in cuts]
    x = k
    for b, c in zip(d.blocks, d.block_cuts):
        members.append(b)
        uncut.append(tuple([v for v in b if node_of[v] < 0]))
        btype.append(min(len(b) - len(c), 2))
        nodes = [node_of[v] for v in c]
        adj.append(nodes)
        for y in nodes:
            adj[y].append(x)
        x += 1
    n_nodes = len(is_cut)
    if n_nodes - 1 != sum(len(c) for c in d.block_cuts):
        raise ValueError("block-cutpoint graph is not a tree (graph disconnected?)")
    adj_t = tuple(tuple(a) for a in adj)
    if root is None:
        root = k - 1
    parent, order = _orient(adj_t, root, rng)
    return BlockCutTree(tuple(is_cut), tuple(members), tuple(uncut), tuple(btype),
                        adj_t, root, parent, order)


def induce(t: BlockCutTree, a: Sequence[int]) -> list[int]:
    """Tree image of a graph assignment: cut nodes copy, block nodes sum their uncut members."""
    return [a[t.members[x][0]] if t.is_cut[x] else sum(a[v] for v in t.uncut[x])
            for x in range(len(t))]


@dataclass(frozen=True)
class PropertyReport:
    ok: bool
    prop: int = 0
    node: int = -1
    detail: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _fail(prop: int, node: int, detail: str) -> PropertyReport:
    return PropertyReport(False, prop, node, detail)


def check_five_properties(t: BlockCutTree, fs: Sequence[int],
                          source: Optional[Sequence[int]] = None) -> PropertyReport:
    """Check the five structural properties of an induced assignment.

    Nodes are scanned in id order (cut nodes first) and every property that
    applies to a node is checked, lowest number first, before moving on. The
    uniqueness clause for type-2 blocks needs the graph assignment and is
    only checked when ``source`` is given.

    "Two nodes carrying 1 not adjacent to the same block node" is read as: the
    two 1s lie in different blocks around the cut vertex, where a block node
    counts as lying in itself.
    """
    for x in range(len(t)):
        val = fs[x]
        if t.is_cut[x]:
            if val == 0:
                # nodes at distance 1 or 2, grouped by the block they hang off
                twos = False
                ones_in: set[int] = set()
                for b in t.adj[x]:
                    if fs[b] == 2:
                        twos = True
                    elif fs[b] == 1:
                        ones_in.add(b)
                    for y in t.adj[b]:
                        if y != x:
                            if fs[y] == 2:
                                twos = True
                            elif fs[y] == 1:
                                ones_in.add(b)
                if not twos and len(ones_in) < 2:
                    return _fail(4, x, "cut node not dominated within two steps")
            else:
                for b in t.adj[x]:
                    if fs[b]:
                        return _fail(5, x, f"nonzero cut node next to nonzero block node {b}")
                    for y in t.adj[b]:
                        if y != x and fs[y]:
                            return _fail(5, x, f"nonzero cut node two steps from nonzero node {y}")
            continue
        typ = t.btype[x]
        if typ == 0 and val != 0:
            return _fail(1, x, "type-0 block node carries a nonzero value")
        if typ == 2 and val not in (0, 2):
            return _fail(2, x, f"type-2 block node carries {val}")
        if typ >= 1 and val == 0:
            twos = sum(1 for y in t.adj[x] if fs[y] == 2)
            if twos != 1:
                return _fail(3, x, f"zero block node has {twos} neighbors carrying 2")
        if typ >= 1 and val != 0:
            for y in t.adj[x]:
                if fs[y]:
                    return _fail(5, x, f"nonzero block node next to nonzero cut node {y}")
            if typ == 2 and source is not None:
                nz = sum(1 for v in t.uncut[x] if source[v])
                if nz != 1:
                    return _fail(5, x, f"type-2 block has {nz} nonzero uncut vertices")
    return PropertyReport(True)


def realize(t: BlockCutTree, n: int, fs: Sequence[int]) -> list[int]:
    """Pull an induced assignment back to the graph.

    Block weight goes on the block's lowest-numbered uncut vertex. Raises
    ``ValueError`` if ``fs`` breaks a property or puts a value above 1 on a
    type-1 block.
    """
    report = check_five_properties(t, fs)
    if not report:
        raise ValueError(f"property {report.prop} fails at node {report.node}: {report.detail}")
    a = [0] * n
    for x in range(len(t)):
        if t.is_cut[x]:
            a[t.members[x][0]] = fs[x]
        elif fs[x]:
            if t.btype[x] == 1 and fs[x] > 1:
                raise ValueError(f"type-1 block node {x} carries {fs[x]}")
            a[t.uncut[x][0]] = fs[x]
    return a
