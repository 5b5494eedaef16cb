"""Brute-force checkers for every coloring model.

These are test oracles: they favor obviously correct loops over speed and
share no code with the coloring kernels. Each checker returns ``None`` when
the coloring is valid and a :class:`Violation` otherwise.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .pattern import (
    AdjacencyGraph,
    BipartiteGraph,
    SparsityPatternCSC,
    _side,
    build_adjacency_graph,
    build_bipartite_graph,
)

__all__ = [
    "Violation",
    "check_distance2",
    "check_proper",
    "check_star",
    "check_acyclic",
    "check_no_zigzag",
    "check_nsop",
    "check_bicoloring",
    "min_colors_bruteforce",
]


@dataclass(frozen=True)
class Violation:
    """Why a coloring is rejected.

    Attributes
    ----------
    kind : str
        Short failure class, such as ``"improper"`` or ``"bicolored-path"``.
    vertices : tuple of int
        The offending vertices (or rows and columns for matrix checks).
    message : str
    """

    kind: str
    vertices: tuple
    message: str

    def __str__(self):
        return f"{self.kind}: {self.message}"


def _adjacency(g):
    if isinstance(g, AdjacencyGraph):
        return g.adjacency
    if isinstance(g, SparsityPatternCSC):
        return build_adjacency_graph(g).adjacency
    return [list(a) for a in g]


def check_distance2(pattern, side, colors):
    """Structural orthogonality of a column (or row) grouping.

    For ``side="columns"`` no two columns with the same color may have a
    nonzero in the same row, and every column must be colored.
    """
    colors = np.asarray(colors)
    side = _side(side)
    dense = pattern.to_dense()
    if side == "rows":
        dense = dense.T
    uncolored = np.flatnonzero(colors <= 0)
    if uncolored.size:
        v = int(uncolored[0])
        return Violation("uncolored", (v,), f"{side[:-1]} {v} has no color")
    for line, row in enumerate(dense):
        seen = {}
        for v in np.flatnonzero(row).tolist():
            c = int(colors[v])
            if c in seen:
                other = "column" if side == "rows" else "row"
                return Violation(
                    "not-orthogonal", (seen[c], v),
                    f"{side} {seen[c]} and {v} share color {c} and {other} {line}",
                )
            seen[c] = v
    return None


def check_proper(g, colors):
    """Every vertex colored and adjacent vertices colored differently."""
    adj = _adjacency(g)
    colors = np.asarray(colors)
    for v in range(len(adj)):
        if colors[v] <= 0:
            return Violation("uncolored", (v,), f"vertex {v} has no color")
    for v, nbrs in enumerate(adj):
        for w in nbrs:
            if colors[v] == colors[w]:
                return Violation("improper", (v, w),
                                 f"adjacent vertices {v} and {w} share color {colors[v]}")
    return None


def check_star(g, colors):
    """Proper coloring with no path on four vertices using only two colors."""
    bad = check_proper(g, colors)
    if bad is not None:
        return bad
    adj = _adjacency(g)
    colors = np.asarray(colors)
    for w, nbrs in enumerate(adj):
        for x in nbrs:
            for v in nbrs:
                if v == x or colors[v] != colors[x]:
                    continue
                for y in adj[x]:
                    if y != w and y != v and colors[y] == colors[w]:
                        return Violation(
                            "bicolored-path", (v, w, x, y),
                            f"path {v}-{w}-{x}-{y} alternates colors {colors[v]} and {colors[w]}",
                        )
    return None


def check_acyclic(g, colors):
    """Proper coloring in which every two-colored subgraph is a forest."""
    bad = check_proper(g, colors)
    if bad is not None:
        return bad
    adj = _adjacency(g)
    colors = np.asarray(colors).tolist()
    by_pair = {}
    for v, nbrs in enumerate(adj):
        for w in nbrs:
            if v < w:
                key = (min(colors[v], colors[w]), max(colors[v], colors[w]))
                by_pair.setdefault(key, []).append((v, w))
    for (c1, c2), edges in by_pair.items():
        parent = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for v, w in edges:
            rv, rw = find(v), find(w)
            if rv == rw:
                return Violation(
                    "bicolored-cycle", (v, w),
                    f"edge {v}-{w} closes a cycle colored only {c1} and {c2}",
                )
            parent[rv] = rw
    return None


def check_no_zigzag(g, colors):
    """The three conditions under which a coloring with neutrals recovers a zero-diagonal matrix.

    1. every edge has a colored endpoint;
    2. the neighbors of a neutral vertex have pairwise different colors;
    3. no walk ``q - i - j - p`` with ``q != j`` and ``p != i`` has colors
       ``(c1, c2, c1, c2)``. The walk may close a triangle (``q == p``).

    Adjacent vertices may share a color.
    """
    adj = _adjacency(g)
    colors = np.asarray(colors).tolist()
    for i, nbrs in enumerate(adj):
        for j in nbrs:
            if colors[i] == 0 and colors[j] == 0:
                return Violation("uncovered-edge", (i, j), f"edge {i}-{j} has two neutral endpoints")
    for i, nbrs in enumerate(adj):
        if colors[i] != 0:
            continue
        seen = {}
        for j in nbrs:
            if colors[j] in seen:
                return Violation(
                    "neutral-conflict", (seen[colors[j]], i, j),
                    f"neutral vertex {i} has two neighbors colored {colors[j]}",
                )
            seen[colors[j]] = j
    for i, nbrs in enumerate(adj):
        for j in nbrs:
            for q in nbrs:
                if q == j or colors[q] != colors[j]:
                    continue
                for p in adj[j]:
                    if p != i and colors[p] == colors[i]:
                        return Violation(
                            "zigzag", (q, i, j, p),
                            f"walk {q}-{i}-{j}-{p} has colors "
                            f"({colors[q]}, {colors[i]}, {colors[j]}, {colors[p]})",
                        )
    return None


def check_nsop(pattern, colors):
    """Every stored entry can be read from a compressed column.

    Entry ``(i, j)`` is recoverable when column ``j`` is colored and is the
    only column of its color with a nonzero in row ``i``, or symmetrically
    with the roles of ``i`` and ``j`` exchanged. This works directly on the
    matrix and does not use any graph.
    """
    colors = np.asarray(colors, dtype=np.int64)
    dense = pattern.to_dense().astype(np.int64)
    k = int(colors.max(initial=0))
    seeds = np.zeros((len(colors), k + 1), dtype=np.int64)
    seeds[np.arange(len(colors)), colors] = 1
    # counts[i, c]: columns of color c with a nonzero in row i
    counts = dense @ seeds
    for i, j in zip(*np.nonzero(dense)):
        cj, ci = colors[j], colors[i]
        if cj > 0 and counts[i, cj] == 1:
            continue
        if ci > 0 and counts[j, ci] == 1:
            continue
        return Violation("unrecoverable", (int(i), int(j)), f"entry ({i}, {j}) cannot be recovered")
    return None


def check_bicoloring(pattern, row_colors, col_colors):
    """Every entry of ``J`` is readable from ``J U`` or from ``V^T J``.

    Entry ``(i, j)`` is readable from ``J U`` if column ``j`` is colored and
    no other column of its color has a nonzero in row ``i``; from ``V^T J``
    under the transposed condition.
    """
    dense = pattern.to_dense()
    rc = np.asarray(row_colors)
    cc = np.asarray(col_colors)
    for i, j in zip(*np.nonzero(dense)):
        if cc[j] > 0 and np.count_nonzero(dense[i] & (cc == cc[j])) == 1:
            continue
        if rc[i] > 0 and np.count_nonzero(dense[:, j] & (rc == rc[i])) == 1:
            continue
        return Violation("unrecoverable", (int(i), int(j)), f"entry ({i}, {j}) cannot be recovered")
    return None


_MODELS = {"star": check_star, "acyclic": check_acyclic}


def _assignments(n, k, adj):
    """Proper colorings with colors ``1..k`` in restricted-growth form."""
    colors = [0] * n

    def extend(v, top):
        if v == n:
            yield colors
            return
        for c in range(1, min(top + 1, k) + 1):
            if any(colors[w] == c for w in adj[v] if w < v):
                continue
            colors[v] = c
            yield from extend(v + 1, max(top, c))
        colors[v] = 0

    yield from extend(0, 0)


def min_colors_bruteforce(g, model, side=None):
    """Fewest colors any valid coloring of the given model uses.

    Parameters
    ----------
    g : AdjacencyGraph, SparsityPatternCSC or list of neighbor lists
        For ``model="distance2"`` pass a BipartiteGraph or pattern and a side.
    model : {"star", "acyclic", "distance2"}
    side : {"columns", "rows"}, optional

    Notes
    -----
    Exhaustive over colorings up to renaming of colors, so only usable on
    about ten vertices.
    """
    if model == "distance2":
        if isinstance(g, SparsityPatternCSC):
            g = build_bipartite_graph(g)
        if not isinstance(g, BipartiteGraph):
            raise TypeError("distance2 needs a bipartite graph or a pattern")
        adj = g.distance2_adjacency(side)
        checker = None
    else:
        if model not in _MODELS:
            raise ValueError(f"unknown model {model!r}")
        adj = _adjacency(g)
        checker = _MODELS[model]
    n = len(adj)
    if n == 0:
        return 0
    if n > 12:
        raise ValueError("brute force is limited to 12 vertices")
    for k in range(1, n + 1):
        for colors in _assignments(n, k, adj):
            if checker is None or checker(adj, colors) is None:
                return k
    return n
