"""Structural sparsity patterns and the graphs built on top of them.

All indices are 0-based. Patterns carry no numerical values; a stored entry
is structurally nonzero even when the file it came from holds an explicit 0.
"""
from __future__ import annotations

from functools import cached_property

import numpy as np

__all__ = [
    "PatternError",
    "SparsityPatternCSC",
    "AdjacencyGraph",
    "BipartiteGraph",
    "transpose_pattern",
    "build_edge_index",
    "build_adjacency_graph",
    "build_bipartite_graph",
    "build_augmented_graph",
]


class PatternError(ValueError):
    """Raised for malformed patterns or patterns of the wrong kind."""


def _index_array(a):
    arr = np.ascontiguousarray(a, dtype=np.int64)
    if arr.ndim != 1:
        raise PatternError("index arrays must be one-dimensional")
    arr.setflags(write=False)
    return arr


class SparsityPatternCSC:
    """Compressed-column structural pattern of an ``n_rows x n_cols`` matrix.

    Parameters
    ----------
    n_rows, n_cols : int
        Matrix shape.
    col_ptr : array_like of int, length ``n_cols + 1``
        Column ``j`` owns positions ``col_ptr[j]:col_ptr[j+1]``.
    row_idx : array_like of int, length ``nnz``
        Row indices, strictly increasing inside each column.

    Raises
    ------
    PatternError
        If any structural invariant is violated (this includes duplicates).
    """

    def __init__(self, n_rows, n_cols, col_ptr, row_idx):
        self.n_rows = int(n_rows)
        self.n_cols = int(n_cols)
        self.col_ptr = _index_array(col_ptr)
        self.row_idx = _index_array(row_idx)
        self._validate()

    def _validate(self):
        m, n, cp, ri = self.n_rows, self.n_cols, self.col_ptr, self.row_idx
        if m < 0 or n < 0:
            raise PatternError(f"negative shape ({m}, {n})")
        if cp.shape != (n + 1,):
            raise PatternError(f"col_ptr must have length n_cols + 1 = {n + 1}")
        if cp[0] != 0 or cp[-1] != ri.size:
            raise PatternError("col_ptr must start at 0 and end at nnz")
        if np.any(np.diff(cp) < 0):
            raise PatternError("col_ptr must be non-decreasing")
        if ri.size:
            if ri.min() < 0 or ri.max() >= m:
                raise PatternError(f"row index out of range [0, {m})")
            # strictly increasing within a column; column starts are exempt
            step = np.diff(ri)
            starts = np.zeros(ri.size, dtype=bool)
            starts[cp[:-1][cp[:-1] < ri.size]] = True
            if np.any(step[~starts[1:]] <= 0):
                raise PatternError(
                    "row indices must be strictly increasing within each column "
                    "(duplicate or unsorted entry)"
                )

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_coo(cls, rows, cols, shape):
        """Build a pattern from coordinate lists. Duplicates are rejected."""
        rows = np.asarray(rows, dtype=np.int64).ravel()
        cols = np.asarray(cols, dtype=np.int64).ravel()
        m, n = shape
        if rows.shape != cols.shape:
            raise PatternError("rows and cols must have the same length")
        if rows.size and (rows.min() < 0 or rows.max() >= m or cols.min() < 0 or cols.max() >= n):
            raise PatternError("coordinate out of range")
        order = np.lexsort((rows, cols))
        rows, cols = rows[order], cols[order]
        if rows.size > 1:
            dup = (np.diff(rows) == 0) & (np.diff(cols) == 0)
            if dup.any():
                k = int(np.flatnonzero(dup)[0])
                raise PatternError(f"duplicate entry ({rows[k]}, {cols[k]})")
        col_ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(cols, minlength=n), out=col_ptr[1:])
        return cls(m, n, col_ptr, rows)

    @classmethod
    def from_dense(cls, mask):
        mask = np.asarray(mask)
        if mask.ndim != 2:
            raise PatternError("dense mask must be two-dimensional")
        rows, cols = np.nonzero(mask)
        return cls.from_coo(rows, cols, mask.shape)

    @classmethod
    def from_scipy(cls, mat):
        """Pattern of a scipy sparse matrix, keeping explicit zeros."""
        coo = mat.tocoo()
        return cls.from_coo(coo.row, coo.col, coo.shape)

    # -- queries ----------------------------------------------------------

    @property
    def shape(self):
        return (self.n_rows, self.n_cols)

    @property
    def nnz(self):
        return int(self.row_idx.size)

    def rows_in(self, j):
        return self.row_idx[self.col_ptr[j]:self.col_ptr[j + 1]]

    @cached_property
    def col_idx(self):
        """Column index of every stored position (length ``nnz``)."""
        out = np.repeat(np.arange(self.n_cols, dtype=np.int64), np.diff(self.col_ptr))
        out.setflags(write=False)
        return out

    def to_dense(self):
        out = np.zeros(self.shape, dtype=bool)
        out[self.row_idx, self.col_idx] = True
        return out

    def to_scipy(self, values=None):
        import scipy.sparse as sp

        data = np.ones(self.nnz, dtype=bool) if values is None else np.asarray(values)
        return sp.csc_matrix((data, self.row_idx, self.col_ptr), shape=self.shape)

    def transpose(self):
        row_ptr, col_idx = transpose_pattern(self)
        return SparsityPatternCSC(self.n_cols, self.n_rows, row_ptr, col_idx)

    def is_symmetric(self):
        if self.n_rows != self.n_cols:
            return False
        t = self.transpose()
        return np.array_equal(t.col_ptr, self.col_ptr) and np.array_equal(t.row_idx, self.row_idx)

    def diagonal_positions(self):
        """Positions ``p`` with ``row_idx[p] == col_idx[p]``."""
        return np.flatnonzero(self.row_idx == self.col_idx)

    def position_of(self, i, j):
        """Stored position of ``(i, j)``, or -1 when the entry is absent."""
        seg = self.rows_in(j)
        k = int(np.searchsorted(seg, i))
        if k < seg.size and seg[k] == i:
            return int(self.col_ptr[j]) + k
        return -1

    def __eq__(self, other):
        if not isinstance(other, SparsityPatternCSC):
            return NotImplemented
        return (
            self.shape == other.shape
            and np.array_equal(self.col_ptr, other.col_ptr)
            and np.array_equal(self.row_idx, other.row_idx)
        )

    __hash__ = None

    def __repr__(self):
        return f"SparsityPatternCSC(shape={self.shape}, nnz={self.nnz})"


def transpose_pattern(p):
    """CSR arrays ``(row_ptr, col_idx)`` of a CSC pattern.

    Counting pass, prefix-sum placement pass, then a pointer shift back by one
    row. Because columns are scanned in increasing order, the column indices of
    every row come out sorted.
    """
    m, n = p.n_rows, p.n_cols
    col_ptr = p.col_ptr.tolist()
    row_idx = p.row_idx.tolist()
    row_ptr = [0] * (m + 1)
    for i in row_idx:
        row_ptr[i] += 1
    counter = 0
    for i in range(m):
        nnz_row = row_ptr[i]
        row_ptr[i] = counter
        counter += nnz_row
    row_ptr[m] = counter
    col_out = [0] * len(row_idx)
    for j in range(n):
        for k in range(col_ptr[j], col_ptr[j + 1]):
            i = row_idx[k]
            col_out[row_ptr[i]] = j
            row_ptr[i] += 1
    # row_ptr[i] now points one past row i; shift back
    for i in range(m, 0, -1):
        row_ptr[i] = row_ptr[i - 1]
    row_ptr[0] = 0
    return np.array(row_ptr, dtype=np.int64), np.array(col_out, dtype=np.int64)


def build_edge_index(p):
    """Map every stored off-diagonal position to its undirected edge index.

    Edges are numbered ``0 .. num_edges-1`` in the order their lower-triangle
    entry ``(i, j), i > j`` is met in a column-major scan; the mirrored
    position ``(j, i)`` receives the same index. Diagonal positions get -1.

    Returns
    -------
    edge_to_index : ndarray of int64, length ``nnz``
    num_edges : int
    """
    if p.n_rows != p.n_cols:
        raise PatternError(f"edge indexing needs a square pattern, got {p.shape}")
    if not p.is_symmetric():
        raise PatternError("edge indexing needs a structurally symmetric pattern")
    n = p.n_cols
    col_ptr = p.col_ptr.tolist()
    row_idx = p.row_idx.tolist()
    edge_to_index = [-1] * len(row_idx)
    offsets = [0] * n
    # in column i, the entries (j, i) with j < i come first and in increasing j,
    # which is exactly the order in which columns j discover them
    k = 0
    for j in range(n):
        for pos in range(col_ptr[j], col_ptr[j + 1]):
            i = row_idx[pos]
            if i > j:
                edge_to_index[pos] = k
                edge_to_index[col_ptr[i] + offsets[i]] = k
                offsets[i] += 1
                k += 1
    return np.array(edge_to_index, dtype=np.int64), k


class AdjacencyGraph:
    """Adjacency graph of a structurally symmetric square pattern.

    Self-loops are never reported as neighbors; nonzero diagonal entries are
    recorded in :attr:`has_diagonal` instead.
    """

    def __init__(self, pattern, edge_to_index, num_edges):
        self.pattern = pattern
        self.edge_to_index = _index_array(edge_to_index)
        self.num_edges = int(num_edges)
        has_diag = np.zeros(pattern.n_cols, dtype=bool)
        has_diag[pattern.row_idx[pattern.diagonal_positions()]] = True
        has_diag.setflags(write=False)
        self.has_diagonal = has_diag

    @property
    def n_vertices(self):
        return self.pattern.n_cols

    @cached_property
    def adjacency(self):
        """Per-vertex neighbor lists (self excluded), ascending."""
        cp = self.pattern.col_ptr.tolist()
        ri = self.pattern.row_idx.tolist()
        return [[w for w in ri[cp[v]:cp[v + 1]] if w != v] for v in range(self.n_vertices)]

    @cached_property
    def edge_lists(self):
        """Per-vertex edge indices aligned with :attr:`adjacency`."""
        cp = self.pattern.col_ptr.tolist()
        ri = self.pattern.row_idx.tolist()
        e2i = self.edge_to_index.tolist()
        return [
            [e2i[p] for p in range(cp[v], cp[v + 1]) if ri[p] != v]
            for v in range(self.n_vertices)
        ]

    def neighbors(self, v):
        return self.adjacency[v]

    def indexed_neighbors(self, v):
        return list(zip(self.adjacency[v], self.edge_lists[v]))

    def degree(self, v):
        return len(self.adjacency[v])

    def degrees(self):
        return np.array([len(a) for a in self.adjacency], dtype=np.int64)

    @cached_property
    def edges(self):
        """``(num_edges, 2)`` array of endpoints ``(low, high)`` per edge index."""
        out = np.empty((self.num_edges, 2), dtype=np.int64)
        cols = self.pattern.col_idx
        rows = self.pattern.row_idx
        lower = rows > cols
        out[self.edge_to_index[lower], 0] = cols[lower]
        out[self.edge_to_index[lower], 1] = rows[lower]
        out.setflags(write=False)
        return out

    def __repr__(self):
        return f"AdjacencyGraph(n_vertices={self.n_vertices}, num_edges={self.num_edges})"


class BipartiteGraph:
    """Row/column bipartite graph of a rectangular pattern, stored CSC and CSR."""

    def __init__(self, csc, row_ptr, col_idx):
        self.csc = csc
        self.row_ptr = _index_array(row_ptr)
        self.col_idx = _index_array(col_idx)

    @property
    def n_rows(self):
        return self.csc.n_rows

    @property
    def n_cols(self):
        return self.csc.n_cols

    def n_vertices(self, side):
        return self.n_cols if _side(side) == "columns" else self.n_rows

    @cached_property
    def _column_lists(self):
        cp, ri = self.csc.col_ptr.tolist(), self.csc.row_idx.tolist()
        return [ri[cp[j]:cp[j + 1]] for j in range(self.n_cols)]

    @cached_property
    def _row_lists(self):
        rp, ci = self.row_ptr.tolist(), self.col_idx.tolist()
        return [ci[rp[i]:rp[i + 1]] for i in range(self.n_rows)]

    def neighbors(self, side, v):
        """Vertices on the opposite side adjacent to vertex ``v`` of ``side``."""
        return self.adjacency(side)[v]

    def adjacency(self, side):
        return self._column_lists if _side(side) == "columns" else self._row_lists

    def distance2_adjacency(self, side):
        """Same-side vertices sharing at least one neighbor, ascending, self excluded."""
        here = self.adjacency(side)
        there = self.adjacency("rows" if _side(side) == "columns" else "columns")
        out = []
        for v, nbrs in enumerate(here):
            seen = set()
            for w in nbrs:
                seen.update(there[w])
            seen.discard(v)
            out.append(sorted(seen))
        return out

    def __repr__(self):
        return f"BipartiteGraph(shape={self.csc.shape}, nnz={self.csc.nnz})"


def _side(side):
    if side in ("columns", "column", "col"):
        return "columns"
    if side in ("rows", "row"):
        return "rows"
    raise ValueError(f"side must be 'rows' or 'columns', got {side!r}")


def build_adjacency_graph(p):
    edge_to_index, num_edges = build_edge_index(p)
    return AdjacencyGraph(p, edge_to_index, num_edges)


def build_bipartite_graph(p):
    row_ptr, col_idx = transpose_pattern(p)
    return BipartiteGraph(p, row_ptr, col_idx)


def build_augmented_graph(j):
    """Adjacency graph of ``H = [[0, J^T], [J, 0]]``.

    Vertex ``k < n`` is column ``k`` of ``J``; vertex ``n + i`` is row ``i``.
    ``J`` sits in the lower triangle, so the lower-triangle entries of ``H``
    visited column by column are exactly the entries of ``J`` in CSC order and
    edge ``e`` of the graph is stored entry ``e`` of ``J``.
    """
    m, n = j.n_rows, j.n_cols
    row_ptr, col_idx = transpose_pattern(j)
    col_ptr = np.concatenate([j.col_ptr, j.nnz + row_ptr[1:]])
    row_idx = np.concatenate([j.row_idx + n, col_idx])
    h = SparsityPatternCSC(n + m, n + m, col_ptr, row_idx)
    edge_to_index = np.empty(2 * j.nnz, dtype=np.int64)
    edge_to_index[: j.nnz] = np.arange(j.nnz)
    # a stable sort of CSC positions by row gives them in CSR order
    edge_to_index[j.nnz:] = np.argsort(j.row_idx, kind="stable")
    return AdjacencyGraph(h, edge_to_index, j.nnz)
