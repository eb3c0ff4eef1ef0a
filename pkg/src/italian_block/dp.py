"""Linear-time independent Italian domination on block graphs.

Each tree node carries five labels, all minimum weights over the subtree
below it (``INF`` when no configuration exists).

Cut node ``u``:
    I0   u = 0 and dominated
    I1   u = 1
    I2   u = 2
    I00  u = 0, its own domination waived
    I01  u = 0, counting an extra outside neighbour of value 1 (included in the weight)

Block node ``b`` (the sum is over ``b`` and its neighbouring cut nodes):
    B0   sum 0
    B1   sum 1
    B2   sum 2
    B01  sum 0, plus an outside cut neighbour of value 1 (weight included)
    B02  sum 0, plus an outside cut neighbour of value 2 (weight included)

Children are folded into their parent one at a time; every merge reads
only the labels from before the merge.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .blockcut import (BlockCutTree, BlockDecomposition, build_tree, decompose,
                       induce, realize, validate_block_graph)
from .graph import Graph, is_independent_italian

INF = math.inf

Labels = tuple  # five ExtWeights

# label slots, identical positions for cut and block labels
L0, L1, L2, L00, L01 = range(5)
B0, B1, B2, B01, B02 = range(5)

CUT_INIT = (INF, 1, 2, 0, INF)
BLOCK_INIT = {
    0: (0, INF, INF, 1, 2),
    1: (INF, 1, INF, INF, 2),
    2: (INF, INF, 2, INF, 2),
}
# value a node itself carries when its label chain starts at a given init slot
CUT_START_VALUE = {L1: 1, L2: 2, L00: 0}
BLOCK_START_VALUE = {B0: 0, B1: 1, B2: 2, B01: 0, B02: 0}


class InternalError(AssertionError):
    """Solver produced an inconsistent state; a bug, never bad input."""


def sub(x, k: int):
    """``x - k`` in extended arithmetic; finite ``x`` must be at least ``k``."""
    if x == INF:
        return INF
    if x < k:
        raise InternalError(f"label underflow: {x} - {k}")
    return x - k


def init_labels(is_cut: bool, btype: int = -1) -> Labels:
    return CUT_INIT if is_cut else BLOCK_INIT[btype]


def _argmin(terms):
    """(value, position) of the first minimal term; position None if all INF."""
    best, pos = INF, None
    for i, (val, _) in enumerate(terms):
        if val < best:
            best, pos = val, i
    return best, pos


def absorb_block_into_cut(parent: Labels, child: Labels, choices: Optional[list] = None) -> Labels:
    """Fold a finished block subtree into its parent cut node.

    ``choices``, if given, receives per new label the (parent slot, child slot)
    pair that achieved it, or None when the label is INF.
    """
    c0, c1, c2, c00, c01 = parent
    b0, b1, b2, b01, b02 = child
    # candidate terms: (value, (parent slot, child slot))
    t0 = ((c0 + b0, (L0, B0)), (sub(c01 + b1, 1), (L01, B1)), (c00 + b2, (L00, B2)))
    t1 = ((sub(c1 + b01, 1), (L1, B01)),)
    t2 = ((sub(c2 + b02, 2), (L2, B02)),)
    t00 = ((c00 + b0, (L00, B0)), (c00 + b1, (L00, B1)), (c00 + b2, (L00, B2)))
    t01 = ((c01 + b0, (L01, B0)), (c00 + b1 + 1, (L00, B1)), (c00 + b2 + 1, (L00, B2)))
    return _collect((t0, t1, t2, t00, t01), choices)


def absorb_cut_into_block(parent: Labels, child: Labels, choices: Optional[list] = None) -> Labels:
    """Fold a finished cut subtree into its parent block node."""
    p0, p1, p2, p01, p02 = parent
    c0, c1, c2, c00, c01 = child
    t0 = ((p0 + c0, (B0, L0)),)
    t1 = ((sub(p1 + c01, 1), (B1, L01)), (sub(p01 + c1, 1), (B01, L1)))
    t2 = ((p2 + c00, (B2, L00)), (sub(p02 + c2, 2), (B02, L2)))
    t01 = ((sub(p01 + c01, 1), (B01, L01)),)
    t02 = ((p02 + c00, (B02, L00)),)
    return _collect((t0, t1, t2, t01, t02), choices)


def _collect(term_lists, choices):
    out = []
    for terms in term_lists:
        val, pos = _argmin(terms)
        out.append(val)
        if choices is not None:
            choices.append(None if pos is None else terms[pos][1])
    return tuple(out)


def finalize(root: Labels) -> tuple[float, Optional[int]]:
    """Minimum over the three non-pendant root labels, with the winning slot."""
    best, slot = INF, None
    for i in (0, 1, 2):
        if root[i] < best:
            best, slot = root[i], i
    return best, slot


def _check_bounds(labels: Labels, is_cut: bool) -> None:
    lows = (0, 1, 2, 0, 1) if is_cut else (0, 1, 2, 1, 2)
    for x, lo in zip(labels, lows):
        if x < lo:
            raise InternalError(f"label {labels} below its lower bound {lows}")


@dataclass
class TreeRun:
    """Result of one sweep over a block-cutpoint tree."""

    labels: list
    root: int
    number: float
    root_slot: Optional[int]
    # per node: [(child, [5 choices]), ...] in absorb order; only with tracing on
    steps: Optional[list] = None


def run_tree(t: BlockCutTree, trace: bool = False, order: Optional[Sequence[int]] = None,
             check_bounds: bool = False) -> TreeRun:
    """Single children-before-parent sweep; ``order`` overrides ``t.order``.

    With ``trace`` or ``check_bounds`` every merge goes through the checked
    ``absorb_*`` functions; otherwise the same recurrences run inlined.
    """
    order = t.order if order is None else order
    is_cut, btype, parent = t.is_cut, t.btype, t.parent
    labels = [CUT_INIT if is_cut[x] else BLOCK_INIT[btype[x]] for x in range(len(t))]
    root = order[-1]
    if order[-1] != t.root:
        raise ValueError("order must end at the tree root")
    steps = None
    if trace or check_bounds:
        steps = [[] for _ in range(len(t))] if trace else None
        for x in order:
            if x == root:
                continue
            p = parent[x]
            choices = [] if trace else None
            if is_cut[p]:
                labels[p] = absorb_block_into_cut(labels[p], labels[x], choices)
            else:
                labels[p] = absorb_cut_into_block(labels[p], labels[x], choices)
            if check_bounds:
                _check_bounds(labels[p], is_cut[p])
            if trace:
                steps[p].append((x, choices))
    else:
        for x in order:
            if x == root:
                continue
            p = parent[x]
            if is_cut[p]:
                c0, c1, c2, c00, c01 = labels[p]
                b0, b1, b2, b01, b02 = labels[x]
                labels[p] = (min(c0 + b0, c01 + b1 - 1, c00 + b2),
                             c1 + b01 - 1,
                             c2 + b02 - 2,
                             c00 + min(b0, b1, b2),
                             min(c01 + b0, c00 + b1 + 1, c00 + b2 + 1))
            else:
                p0, p1, p2, p01, p02 = labels[p]
                c0, c1, c2, c00, c01 = labels[x]
                labels[p] = (p0 + c0,
                             min(p1 + c01 - 1, p01 + c1 - 1),
                             min(p2 + c00, p02 + c2 - 2),
                             p01 + c01 - 1,
                             p02 + c00)
    number, slot = finalize(labels[root])
    if number == INF:
        raise InternalError("root labels all infinite")
    return TreeRun(labels, root, number, slot, steps)


def trace_values(t: BlockCutTree, run: TreeRun, root_slot: Optional[int] = None) -> list[int]:
    """Walk the argmin records top-down and return the induced value of every node.

    ``root_slot`` picks a different finite root label than the one ``finalize`` chose.
    """
    if run.steps is None:
        raise ValueError("run was made without tracing")
    if root_slot is None:
        root_slot = run.root_slot
    elif run.labels[run.root][root_slot] == INF:
        raise ValueError(f"root label {root_slot} is infinite")
    fs = [0] * len(t)
    stack = [(run.root, root_slot)]
    while stack:
        x, slot = stack.pop()
        for child, choices in reversed(run.steps[x]):
            pick = choices[slot]
            if pick is None:
                raise InternalError(f"no argmin record for node {x} slot {slot}")
            slot, child_slot = pick
            stack.append((child, child_slot))
        start = CUT_START_VALUE if t.is_cut[x] else BLOCK_START_VALUE
        if slot not in start:
            raise InternalError(f"label chain of node {x} starts at INF slot {slot}")
        fs[x] = start[slot]
    return fs


@dataclass
class SolveResult:
    number: int
    certificate: Optional[list[int]] = None
    stats: dict = field(default_factory=dict)


def _solve_component(g: Graph, d: BlockDecomposition,
                     want_certificate: bool) -> tuple[int, Optional[list[int]], int]:
    if not d.cut_vertices:
        # complete graph
        num = min(g.n, 2)
        if not want_certificate:
            return num, None, 0
        return num, [1] if g.n == 1 else [2] + [0] * (g.n - 1), 0
    t = build_tree(g, d)
    run = run_tree(t, trace=want_certificate)
    cert = extract_certificate(t, g, run) if want_certificate else None
    return int(run.number), cert, len(t)


def extract_certificate(t: BlockCutTree, g: Graph, run: TreeRun,
                        root_slot: Optional[int] = None) -> list[int]:
    """Assignment realizing a root label of a traced run, verified before it is returned."""
    fs = trace_values(t, run, root_slot)
    try:
        a = realize(t, g.n, fs)
    except ValueError as exc:
        raise InternalError(f"traced values are not realizable: {exc}") from None
    check = is_independent_italian(g, a)
    if not check:
        raise InternalError(f"certificate fails the checker: {check.violation}")
    expected = run.labels[run.root][run.root_slot if root_slot is None else root_slot]
    if sum(a) != expected:
        raise InternalError(f"certificate weight {sum(a)} != {expected}")
    if induce(t, a) != fs:
        raise InternalError("certificate does not induce the traced values")
    return a


def solve(g: Graph, want_certificate: bool = False) -> SolveResult:
    """Independent Italian domination number of a block graph, summed over components.

    Raises :class:`NotBlockGraphError` if some block is not a clique.
    """
    start = time.perf_counter()
    d = decompose(g)
    validate_block_graph(g, d)
    tree_nodes = 0
    if d.components <= 1:
        if g.n == 0:
            total, cert = 0, ([] if want_certificate else None)
        else:
            total, cert, tree_nodes = _solve_component(g, d, want_certificate)
    else:
        total = 0
        cert = [0] * g.n if want_certificate else None
        for comp in g.components():
            h, back = g.subgraph(comp)
            num, sub_cert, size = _solve_component(h, decompose(h), want_certificate)
            total += num
            tree_nodes += size
            if want_certificate:
                for i, v in enumerate(back):
                    cert[v] = sub_cert[i]
    elapsed = time.perf_counter() - start
    return SolveResult(total, cert, {"components": d.components, "tree_nodes": tree_nodes,
                                     "elapsed_s": elapsed})
