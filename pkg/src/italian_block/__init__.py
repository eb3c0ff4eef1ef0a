"""Independent Italian domination number of block graphs in linear time."""

from .blockcut import (BlockCutTree, BlockDecomposition, NotBlockGraphError, build_tree,
                       check_five_properties, decompose, induce, realize, validate_block_graph)
from .dp import SolveResult, solve
from .generator import GenParams, family, random_block_graph
from .graph import (Graph, GraphFormatError, assignment_weight, greedy_mis_bound,
                    is_independent_italian, parse_graph)
from .oracle import OracleResult, brute_force

__all__ = [
    "BlockCutTree", "BlockDecomposition", "GenParams", "Graph", "GraphFormatError",
    "NotBlockGraphError", "OracleResult", "SolveResult", "assignment_weight", "brute_force",
    "build_tree", "check_five_properties", "decompose", "family", "greedy_mis_bound",
    "induce", "is_independent_italian", "parse_graph", "random_block_graph", "realize",
    "solve", "validate_block_graph",
]
