import itertools

import pytest
from hypothesis import settings, strategies as st

from italian_block.generator import GenParams, random_block_graph
from italian_block.graph import Graph

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")

_ACCEPTANCE: dict[str, tuple[bool, str]] = {}


def record_criterion(key: str, ok: bool, detail: str) -> None:
    _ACCEPTANCE[key] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(_ACCEPTANCE):
        ok, detail = _ACCEPTANCE[key]
        terminalreporter.write_line(f"{key}: {'PASS' if ok else 'FAIL'}  {detail}")


def graph(n, edges):
    return Graph.from_edges(n, edges)


def path(k):
    return graph(k, [(i, i + 1) for i in range(k - 1)])


def complete(k):
    return graph(k, itertools.combinations(range(k), 2))


def cycle(k):
    return graph(k, [(i, (i + 1) % k) for i in range(k)])


BOWTIE = graph(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


gen_params = st.builds(
    GenParams,
    num_blocks=st.integers(1, 6),
    max_clique=st.integers(2, 4),
    seed=st.integers(0, 2**64 - 1),
)

block_graphs = gen_params.map(random_block_graph)

# block graphs guaranteed to have a cut vertex
tree_block_graphs = st.builds(
    GenParams,
    num_blocks=st.integers(2, 6),
    max_clique=st.integers(2, 4),
    seed=st.integers(0, 2**64 - 1),
).map(random_block_graph)


@st.composite
def small_graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph.from_edges(n, chosen)


@pytest.fixture
def p3():
    return path(3)
