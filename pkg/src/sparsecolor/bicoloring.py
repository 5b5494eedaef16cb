"""Bicoloring through symmetric coloring of the augmented matrix.

A rectangular ``m x n`` pattern ``J`` is embedded in the symmetric matrix
``H = [[0, J^T], [J, 0]]``. A star or acyclic coloring of ``H``, once
post-processed, colors columns (vertices ``0 .. n-1``) and rows (vertices
``n .. n+m-1``) at the same time. Remapping turns the symmetric colors into
separately numbered column colors, giving ``B_c = J U``, and row colors,
giving ``B_r = V^T J``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import Coloring, _frozen, acyclic_coloring, star_coloring
from .orderings import order_vertices
from .pattern import AdjacencyGraph, build_augmented_graph
from .postprocess import build_trees, classify_structures, post_process, reverse_bfs

__all__ = [
    "BicoloringResult",
    "remap_colors",
    "bicolor",
    "symmetric_coloring",
    "bs_entry",
    "seed_matrix",
]


def remap_colors(m, n, num_sym_colors, sym_colors):
    """Split symmetric colors into row colors and column colors.

    Columns are scanned first, then rows; each side numbers its symmetric
    colors by first occurrence. Neutral vertices keep color 0.

    Parameters
    ----------
    m, n : int
        Shape of ``J``.
    num_sym_colors : int
    sym_colors : array_like of int, length ``n + m``

    Returns
    -------
    row_colors, col_colors : ndarray
    sym_to_row, sym_to_col : ndarray, length ``num_sym_colors + 1``
        Row (column) color of every symmetric color, 0 if no row (column)
        uses it. Entry 0 is always 0, so the arrays can be indexed by color.
    num_row_colors, num_col_colors : int
    """
    sym_colors = np.asarray(sym_colors, dtype=np.int64)
    if sym_colors.shape != (n + m,):
        raise ValueError(f"sym_colors must have length n + m = {n + m}")
    if sym_colors.size and (sym_colors.min() < 0 or sym_colors.max() > num_sym_colors):
        raise ValueError("symmetric colors must lie in 0 .. num_sym_colors")

    def renumber(block):
        table = np.zeros(num_sym_colors + 1, dtype=np.int64)
        out = np.zeros(len(block), dtype=np.int64)
        count = 0
        for k, c in enumerate(block.tolist()):
            if c > 0:
                if table[c] == 0:
                    count += 1
                    table[c] = count
                out[k] = table[c]
        return out, table, count

    col_colors, sym_to_col, num_col = renumber(sym_colors[:n])
    row_colors, sym_to_row, num_row = renumber(sym_colors[n:])
    return row_colors, col_colors, sym_to_row, sym_to_col, num_row, num_col


def symmetric_coloring(g, mode, order):
    """Run star or acyclic coloring and return ``(coloring, recovery metadata)``.

    The metadata is a StarSet for star coloring and the reverse BFS plan of
    the forest for acyclic coloring.
    """
    if mode == "star":
        return star_coloring(g, order)
    if mode == "acyclic":
        coloring, forest = acyclic_coloring(g, order)
        return coloring, reverse_bfs(build_trees(g, forest))
    raise ValueError(f"mode must be 'star' or 'acyclic', got {mode!r}")


@dataclass(frozen=True)
class BicoloringResult:
    """Row and column colors of a bicoloring plus what decompression needs."""

    row_colors: np.ndarray
    col_colors: np.ndarray
    sym_colors: np.ndarray
    sym_to_row: np.ndarray
    sym_to_col: np.ndarray
    num_row_colors: int
    num_col_colors: int
    num_sym_colors: int
    mode: str
    graph: AdjacencyGraph
    recovery: object
    raw_coloring: Coloring

    @property
    def colors_before_postprocess(self):
        return self.raw_coloring.num_colors

    @property
    def num_colors(self):
        return self.num_row_colors + self.num_col_colors

    @property
    def shape(self):
        return len(self.row_colors), len(self.col_colors)


def bicolor(j, mode="star", order="natural", *, seed=0, prefer="first", buckets="stack"):
    """Bicolor a rectangular pattern.

    Parameters
    ----------
    j : SparsityPatternCSC
    mode : {"star", "acyclic"}
        Star bicoloring allows direct decompression, acyclic bicoloring
        needs substitution but usually fewer colors.
    order : str or array_like
        Ordering name for the augmented graph, or an explicit permutation
        of its ``n + m`` vertices.
    seed : int
        Seed of the random ordering.
    prefer : {"first", "rows", "columns"}
        Post-processing tie-break; see :func:`post_process`.
    buckets : {"stack", "vector"}

    Returns
    -------
    BicoloringResult
    """
    m, n = j.shape
    h = build_augmented_graph(j)
    if isinstance(order, str):
        order = order_vertices(h, order, seed=seed, buckets=buckets)
    raw, metadata = symmetric_coloring(h, mode, order)
    structures = classify_structures(h, mode, metadata)
    sym, recovery = post_process(h, raw, structures, prefer=prefer, split=n)
    row, col, s2r, s2c, nr, nc = remap_colors(m, n, sym.num_colors, sym.color)
    return BicoloringResult(
        row_colors=_frozen(row),
        col_colors=_frozen(col),
        sym_colors=sym.color,
        sym_to_row=_frozen(s2r),
        sym_to_col=_frozen(s2c),
        num_row_colors=nr,
        num_col_colors=nc,
        num_sym_colors=sym.num_colors,
        mode=mode,
        graph=h,
        recovery=recovery,
        raw_coloring=raw,
    )


def bs_entry(r, c, b_r, b_c, sym_to_row, sym_to_col, n):
    """Entry ``(r, c)`` of the symmetric compressed matrix ``B_s = H U_s``.

    ``B_s`` is never formed: its column-vertex rows come from ``B_r`` and its
    row-vertex rows from ``B_c``, and the other blocks are structurally zero.

    Parameters
    ----------
    r : int
        Vertex of ``H``, in ``0 .. n + m - 1``.
    c : int
        Symmetric color, in ``1 .. num_sym_colors``.
    b_r : ndarray, shape (num_row_colors, n)
        ``V^T J``.
    b_c : ndarray, shape (m, num_col_colors)
        ``J U``.
    """
    if not 1 <= c < len(sym_to_row):
        raise IndexError(f"symmetric color {c} out of range")
    m = b_c.shape[0]
    if not 0 <= r < n + m:
        raise IndexError(f"vertex {r} out of range")
    if r < n:
        k = sym_to_row[c]
        return b_r[k - 1, r] if k else 0
    k = sym_to_col[c]
    return b_c[r - n, k - 1] if k else 0


def seed_matrix(colors, num_colors=None):
    """0/1 group indicator: ``S[v, c - 1] = 1`` iff ``colors[v] == c``.

    Neutral vertices get an all-zero row.
    """
    colors = np.asarray(colors, dtype=np.int64)
    if num_colors is None:
        num_colors = int(colors.max(initial=0))
    s = np.zeros((len(colors), num_colors), dtype=np.int64)
    nz = colors > 0
    s[np.flatnonzero(nz), colors[nz] - 1] = 1
    return s
