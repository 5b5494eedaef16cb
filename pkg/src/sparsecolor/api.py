"""One entry point for the six coloring modes."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .bicoloring import BicoloringResult, bicolor, symmetric_coloring
from .coloring import Coloring, partial_distance2_coloring
from .orderings import normalize_order, order_vertices
from .compression import compress, decompress, make_plan
from .pattern import (
    PatternError,
    SparsityPatternCSC,
    build_adjacency_graph,
    build_augmented_graph,
    build_bipartite_graph,
)
from .postprocess import classify_structures, post_process
from .verify import (
    Violation,
    check_acyclic,
    check_bicoloring,
    check_distance2,
    check_no_zigzag,
    check_nsop,
    check_star,
)

__all__ = [
    "MODES",
    "ColoringResult",
    "build_graph",
    "color",
    "color_graph",
    "random_values",
    "roundtrip_check",
    "verify_result",
]

MODES = ("column", "row", "star", "acyclic", "star-bicoloring", "acyclic-bicoloring")


@dataclass(frozen=True)
class ColoringResult:
    """Outcome of :func:`color`.

    Attributes
    ----------
    mode : str
        One of :data:`MODES`.
    pattern : SparsityPatternCSC
    coloring : Coloring or None
        Colors of the columns, rows or symmetric vertices. ``None`` for the
        bicoloring modes, which keep their colors in ``bicoloring``.
    graph : BipartiteGraph or AdjacencyGraph
    recovery : StarSet, ReverseBfsPlan or None
        Metadata for symmetric decompression.
    bicoloring : BicoloringResult or None
    raw_coloring : Coloring or None
        Symmetric colors before post-processing, when it was applied.
    timings : dict
        Nanoseconds spent in ``"order"`` and ``"color"``; coloring time
        includes post-processing and remapping.
    """

    mode: str
    pattern: SparsityPatternCSC
    coloring: Coloring | None
    graph: object
    recovery: object = None
    bicoloring: BicoloringResult | None = None
    raw_coloring: Coloring | None = None
    timings: dict = field(default_factory=dict, compare=False)

    @property
    def num_colors(self):
        if self.bicoloring is not None:
            return self.bicoloring.num_colors
        return self.coloring.num_colors

    @property
    def num_row_colors(self):
        if self.bicoloring is not None:
            return self.bicoloring.num_row_colors
        return self.coloring.num_colors if self.mode == "row" else 0

    @property
    def num_col_colors(self):
        if self.bicoloring is not None:
            return self.bicoloring.num_col_colors
        return 0 if self.mode == "row" else self.coloring.num_colors


def _mode(mode):
    mode = str(mode).lower().replace("_", "-")
    if mode == "columns":
        mode = "column"
    if mode == "rows":
        mode = "row"
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; expected one of {MODES}")
    return mode


def build_graph(pattern, mode):
    """Graph that ``mode`` colors: bipartite, adjacency, or augmented adjacency."""
    mode = _mode(mode)
    if mode in ("column", "row"):
        return build_bipartite_graph(pattern)
    if mode in ("star", "acyclic"):
        if pattern.n_rows != pattern.n_cols or not pattern.is_symmetric():
            raise PatternError(f"{mode} coloring needs a structurally symmetric matrix")
        return build_adjacency_graph(pattern)
    return build_augmented_graph(pattern)


def color_graph(pattern, graph, mode, order="natural", *, seed=0, prefer="first",
                postprocess=False, buckets="stack"):
    """Color an already built graph; see :func:`color`."""
    mode = _mode(mode)
    order = normalize_order(order)
    if mode in ("column", "row"):
        side = "columns" if mode == "column" else "rows"
        t0 = time.perf_counter_ns()
        pi = order_vertices(graph, order, side=side, seed=seed, buckets=buckets)
        t1 = time.perf_counter_ns()
        coloring = partial_distance2_coloring(graph, side, pi)
        t2 = time.perf_counter_ns()
        return ColoringResult(mode, pattern, coloring, graph,
                              timings={"order": t1 - t0, "color": t2 - t1})

    t0 = time.perf_counter_ns()
    pi = order_vertices(graph, order, seed=seed, buckets=buckets)
    t1 = time.perf_counter_ns()
    if mode in ("star", "acyclic"):
        coloring, recovery = symmetric_coloring(graph, mode, pi)
        raw = None
        if postprocess:
            raw = coloring
            structures = classify_structures(graph, mode, recovery)
            coloring, recovery = post_process(graph, coloring, structures, prefer="first")
        t2 = time.perf_counter_ns()
        return ColoringResult(mode, pattern, coloring, graph, recovery, raw_coloring=raw,
                              timings={"order": t1 - t0, "color": t2 - t1})

    base = mode.split("-")[0]
    result = bicolor(pattern, base, pi, prefer=prefer)
    t2 = time.perf_counter_ns()
    return ColoringResult(mode, pattern, None, result.graph, result.recovery, result,
                          raw_coloring=result.raw_coloring,
                          timings={"order": t1 - t0, "color": t2 - t1})


def color(pattern, mode, order="natural", *, seed=0, prefer="first", postprocess=False,
          buckets="stack"):
    """Color a sparsity pattern.

    Parameters
    ----------
    pattern : SparsityPatternCSC
    mode : str
        ``"column"`` or ``"row"`` for partial distance-2 coloring,
        ``"star"`` or ``"acyclic"`` for a symmetric pattern, or
        ``"star-bicoloring"`` / ``"acyclic-bicoloring"``.
    order : str
        Vertex ordering, see :func:`sparsecolor.orderings.order_vertices`.
    seed : int
        Seed of the random ordering.
    prefer : {"first", "rows", "columns"}
        Bicoloring tie-break between neutralizing a row or a column.
    postprocess : bool
        Neutralize unneeded colors after star or acyclic coloring.
        Bicoloring always post-processes.
    buckets : {"stack", "vector"}

    Returns
    -------
    ColoringResult

    Examples
    --------
    >>> import numpy as np
    >>> from sparsecolor import SparsityPatternCSC, color
    >>> p = SparsityPatternCSC.from_dense(np.eye(3, dtype=bool))
    >>> color(p, "column").num_colors
    1
    """
    return color_graph(pattern, build_graph(pattern, mode), mode, order, seed=seed,
                       prefer=prefer, postprocess=postprocess, buckets=buckets)


def random_values(pattern, mode, rng=None, low=-99, high=100):
    """Integer values on the stored positions, symmetric for star and acyclic modes."""
    rng = np.random.default_rng(rng)
    dense = rng.integers(low, high, size=pattern.shape)
    if _mode(mode) in ("star", "acyclic"):
        dense = np.triu(dense) + np.triu(dense, 1).T
    return dense[pattern.row_idx, pattern.col_idx]


def roundtrip_check(result, values=None, rng=0):
    """Compress integer values and check that decompression returns them exactly."""
    if values is None:
        values = random_values(result.pattern, result.mode, rng)
    got = decompress(compress(result, values), make_plan(result))
    bad = np.flatnonzero(got != values)
    if bad.size:
        k = int(bad[0])
        i, j = int(result.pattern.row_idx[k]), int(result.pattern.col_idx[k])
        return Violation("roundtrip", (i, j),
                         f"entry ({i}, {j}) decompressed to {got[k]} instead of {values[k]}")
    return None


def verify_result(result, *, roundtrip=True, rng=0):
    """Run the oracle matching ``result.mode``; ``None`` means valid.

    Column and row colorings are checked for structural orthogonality.
    Symmetric colorings are checked as star or acyclic colorings (before
    post-processing, when it was applied). Post-processed star colorings must
    also recover every entry; bicolorings must satisfy the no-zig-zag
    conditions on the augmented graph (star) and recover every entry of the
    rectangular matrix. With ``roundtrip=True`` an integer compress and
    decompress cycle is checked as well.
    """
    mode, p = result.mode, result.pattern
    if mode in ("column", "row"):
        bad = check_distance2(p, "columns" if mode == "column" else "rows", result.coloring.color)
    elif mode in ("star", "acyclic"):
        raw = result.raw_coloring if result.raw_coloring is not None else result.coloring
        check = check_star if mode == "star" else check_acyclic
        bad = check(result.graph, raw.color)
        if bad is None and mode == "star" and result.raw_coloring is not None:
            bad = check_nsop(p, result.coloring.color)
    else:
        bc = result.bicoloring
        check = check_star if bc.mode == "star" else check_acyclic
        bad = check(result.graph, bc.raw_coloring.color)
        if bad is None and bc.mode == "star":
            bad = check_no_zigzag(result.graph, bc.sym_colors)
            if bad is None:
                bad = check_bicoloring(p, bc.row_colors, bc.col_colors)
    if bad is None and roundtrip:
        bad = roundtrip_check(result, rng=rng)
    return bad
