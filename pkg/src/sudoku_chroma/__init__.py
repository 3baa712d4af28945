"""Exact k-Sudoku colorings of small graphs.

A partial proper coloring is a k-Sudoku coloring when it extends to exactly one
proper k-coloring of the whole graph; sn(G, k) is the fewest colored vertices
such a coloring can have.
"""

from .coloring import (
    Contradiction,
    ExtensionCount,
    PartialColoring,
    chromatic_number,
    clique_number,
    color_lists,
    count_extensions,
    is_proper_partial,
    propagate,
    unique_extension,
)
from .graph import (
    Graph,
    add_apex,
    attach_clique,
    build_bistar,
    build_complete,
    build_complete_bipartite,
    build_cycle,
    build_path,
    build_star,
    corona,
    embed_kplus1,
)
from .search import (
    SnResult,
    SudokuCertificate,
    is_sudoku_coloring,
    lower_bound,
    sudoku_number,
    sudoku_number_chromatic,
)

__all__ = [
    "Contradiction", "ExtensionCount", "PartialColoring", "chromatic_number", "clique_number",
    "color_lists", "count_extensions", "is_proper_partial", "propagate", "unique_extension",
    "Graph", "add_apex", "attach_clique", "build_bistar", "build_complete",
    "build_complete_bipartite", "build_cycle", "build_path", "build_star", "corona",
    "embed_kplus1", "SnResult", "SudokuCertificate", "is_sudoku_coloring", "lower_bound",
    "sudoku_number", "sudoku_number_chromatic",
]
