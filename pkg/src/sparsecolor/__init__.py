"""Sparse matrix coloring, bicoloring and decompression.

Typical use::

    from sparsecolor import read_mtx, color, compress, make_plan, decompress

    pattern, values = read_mtx("matrix.mtx")
    result = color(pattern, "star-bicoloring")
    plan = make_plan(result)
    recovered = decompress(compress(result, values), plan)
"""
from .api import MODES, ColoringResult, color, random_values, roundtrip_check, verify_result
from .bicoloring import BicoloringResult, bicolor, bs_entry, remap_colors, seed_matrix
from .coloring import Coloring, StarSet, acyclic_coloring, partial_distance2_coloring, star_coloring
from .compression import (
    DirectPlan,
    SubstitutionPlan,
    compress,
    decompress,
    decompress_direct,
    decompress_substitution,
    decompress_triangle,
    iter_color_slices,
    make_plan,
    plan_direct,
    plan_substitution,
)
from .forest import Forest, create_forest
from .mmio import MatrixMarketError, read_mtx
from .orderings import ORDERINGS, StackBuckets, VectorBuckets, order_vertices
from .pattern import (
    AdjacencyGraph,
    BipartiteGraph,
    PatternError,
    SparsityPatternCSC,
    build_adjacency_graph,
    build_augmented_graph,
    build_bipartite_graph,
    build_edge_index,
    transpose_pattern,
)
from .postprocess import (
    ReverseBfsPlan,
    StructureSets,
    TreeSet,
    build_trees,
    classify_structures,
    post_process,
    reverse_bfs,
)
from .verify import (
    Violation,
    check_acyclic,
    check_bicoloring,
    check_distance2,
    check_no_zigzag,
    check_nsop,
    check_proper,
    check_star,
    min_colors_bruteforce,
)

__version__ = "0.1.0"
