"""Compression of value matrices and recovery of their nonzeros.

Values always live on the stored positions of a pattern, in CSC order.
Compressed matrices are dense with one column (or, for row compression, one
row) per color:

* column mode: ``B = A U``, shape ``(m, k)``
* row mode: ``B = V^T A``, shape ``(k, n)``
* star and acyclic: ``B = A U``, shape ``(n, k)``
* bicoloring: the pair ``(B_r, B_c) = (V^T J, J U)``

Direct plans map every stored position to one linear index of ``B`` taken
column by column, so decompression is a single gather. Substitution plans
walk the two-colored trees from the leaves up.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .coloring import StarSet
from .postprocess import ReverseBfsPlan

__all__ = [
    "compress",
    "DirectPlan",
    "SubstitutionPlan",
    "plan_direct",
    "plan_substitution",
    "make_plan",
    "decompress",
    "decompress_direct",
    "decompress_substitution",
    "decompress_triangle",
    "iter_color_slices",
]


def _compress_columns(pattern, values, colors, k):
    b = np.zeros((pattern.n_rows, k), dtype=np.result_type(values, np.int64))
    c = np.asarray(colors)[pattern.col_idx]
    keep = c > 0
    np.add.at(b, (pattern.row_idx[keep], c[keep] - 1), values[keep])
    return b


def _compress_rows(pattern, values, colors, k):
    b = np.zeros((k, pattern.n_cols), dtype=np.result_type(values, np.int64))
    c = np.asarray(colors)[pattern.row_idx]
    keep = c > 0
    np.add.at(b, (c[keep] - 1, pattern.col_idx[keep]), values[keep])
    return b


def compress(result, values):
    """Compressed matrix (or ``(B_r, B_c)`` pair) of ``values`` under a coloring.

    Parameters
    ----------
    result : ColoringResult
    values : array_like, length ``nnz``
        Numerical values on the stored positions of ``result.pattern``.

    Returns
    -------
    ndarray or tuple of ndarray
    """
    p = result.pattern
    values = np.asarray(values)
    if values.shape != (p.nnz,):
        raise ValueError(f"expected {p.nnz} values, got shape {values.shape}")
    if result.bicoloring is not None:
        bc = result.bicoloring
        return (
            _compress_rows(p, values, bc.row_colors, bc.num_row_colors),
            _compress_columns(p, values, bc.col_colors, bc.num_col_colors),
        )
    c = result.coloring
    if c.color.size and c.color.max() > c.num_colors:
        raise ValueError("color out of range")
    if result.mode == "row":
        return _compress_rows(p, values, c.color, c.num_colors)
    return _compress_columns(p, values, c.color, c.num_colors)


@dataclass(frozen=True)
class DirectPlan:
    """Gather indices for direct decompression.

    Attributes
    ----------
    compressed_indices : ndarray
        Column-major linear index into the compressed matrix for every stored
        position. For bicoloring it is aligned with ``a_indices`` instead.
    b_shape : tuple
        Shape of ``B``, or of ``(B_r, B_c)`` for bicoloring.
    a_indices : ndarray or None
        Bicoloring only: stored positions, those read from ``B_c`` first.
    split : int
        Bicoloring only: number of positions read from ``B_c``.
    axis : int
        1 when colors are columns of ``B``, 0 when they are rows.
    """

    mode: str
    nnz: int
    compressed_indices: np.ndarray
    b_shape: tuple
    a_indices: np.ndarray | None = None
    split: int = 0
    axis: int = 1
    triangle_mask: dict | None = None


def _linear(rows, cols, n_rows):
    return np.asarray(rows, dtype=np.int64) + n_rows * np.asarray(cols, dtype=np.int64)


def plan_direct(result):
    """Precompute where each stored entry sits in the compressed matrix.

    Supports column, row, star and star-bicoloring results.
    """
    p = result.pattern
    mode = result.mode
    rows, cols = p.row_idx, p.col_idx
    if mode == "column":
        c = result.coloring
        idx = _linear(rows, c.color[cols] - 1, p.n_rows)
        return DirectPlan(mode, p.nnz, idx, (p.n_rows, c.num_colors))
    if mode == "row":
        c = result.coloring
        k = c.num_colors
        idx = _linear(c.color[rows] - 1, cols, k)
        return DirectPlan(mode, p.nnz, idx, (k, p.n_cols), axis=0)
    if mode == "star":
        stars = result.recovery
        if not isinstance(stars, StarSet):
            raise ValueError("star plan needs a StarSet")
        color = result.coloring.color
        g = result.graph
        e = g.edge_to_index
        hub = np.array([stars.hub_vertex(s) for s in range(stars.num_stars)], dtype=np.int64)
        hubs = np.where(rows == cols, cols, -1)
        off = rows != cols
        hubs[off] = hub[stars.star[e[off]]]
        # entry (i, j) with hub j is read on row i; with hub i it is (j, i), read on row j
        spoke = np.where(hubs == cols, rows, cols)
        if np.any((hubs != rows) & (hubs != cols)):
            raise ValueError("star metadata does not match the pattern")
        if np.any(color[hubs] == 0):
            raise ValueError("a hub has the neutral color")
        idx = _linear(spoke, color[hubs] - 1, p.n_rows)
        masks = {"lower": rows >= cols, "upper": rows <= cols}
        return DirectPlan(mode, p.nnz, idx, (p.n_rows, result.coloring.num_colors),
                          triangle_mask=masks)
    if mode == "star-bicoloring":
        bc = result.bicoloring
        stars = result.recovery
        m, n = p.shape
        hub = np.array([stars.hub_vertex(s) for s in range(stars.num_stars)], dtype=np.int64)
        hubs = hub[stars.star]
        from_c = hubs == cols
        if np.any(~from_c & (hubs != rows + n)):
            raise ValueError("star metadata does not match the pattern")
        pos = np.arange(p.nnz, dtype=np.int64)
        a_c, a_r = pos[from_c], pos[~from_c]
        idx_c = _linear(rows[a_c], bc.col_colors[cols[a_c]] - 1, m)
        idx_r = _linear(bc.row_colors[rows[a_r]] - 1, cols[a_r], bc.num_row_colors)
        if np.any(bc.col_colors[cols[a_c]] == 0) or np.any(bc.row_colors[rows[a_r]] == 0):
            raise ValueError("a hub has the neutral color")
        return DirectPlan(
            mode, p.nnz, np.concatenate([idx_c, idx_r]),
            ((bc.num_row_colors, n), (m, bc.num_col_colors)),
            a_indices=np.concatenate([a_c, a_r]), split=len(a_c),
        )
    raise ValueError(f"no direct plan for mode {mode!r}")


def _flat(b, shape):
    b = np.asarray(b)
    if b.shape != tuple(shape):
        raise ValueError(f"compressed matrix has shape {b.shape}, expected {tuple(shape)}")
    return b.ravel(order="F")


def decompress_direct(b, plan):
    """Values on the stored positions, gathered from ``b``.

    ``b`` is the output of :func:`compress`: one array, or ``(B_r, B_c)``
    for star bicoloring.
    """
    if plan.a_indices is None:
        return _flat(b, plan.b_shape)[plan.compressed_indices]
    b_r, b_c = b
    flat_r = _flat(b_r, plan.b_shape[0])
    flat_c = _flat(b_c, plan.b_shape[1])
    out = np.zeros(plan.nnz, dtype=np.result_type(flat_r, flat_c))
    ell = plan.split
    out[plan.a_indices[:ell]] = flat_c[plan.compressed_indices[:ell]]
    out[plan.a_indices[ell:]] = flat_r[plan.compressed_indices[ell:]]
    return out


def iter_color_slices(plan):
    """Decompression work grouped by the color slice it reads.

    Yields ``(source, color, positions, offsets)``: the stored ``positions``
    take their values from entries ``offsets`` of the slice of color
    ``color`` (1-based). ``source`` is ``"B"`` for one compressed matrix,
    ``"B_c"`` or ``"B_r"`` for bicoloring. A slice is a column of ``B`` and
    ``B_c``, a row of ``B_r`` and of a row-compressed ``B``. Applying every
    slice, in any order, fills the same values as :func:`decompress_direct`.
    """
    if plan.a_indices is None:
        parts = [("B", np.arange(plan.nnz), plan.compressed_indices, plan.b_shape, plan.axis)]
    else:
        ell = plan.split
        parts = [
            ("B_c", plan.a_indices[:ell], plan.compressed_indices[:ell], plan.b_shape[1], 1),
            ("B_r", plan.a_indices[ell:], plan.compressed_indices[ell:], plan.b_shape[0], 0),
        ]
    for source, positions, idx, shape, axis in parts:
        if axis == 1:
            color, offset = np.divmod(idx, shape[0])
        else:
            offset, color = np.divmod(idx, shape[0])
        for c in np.unique(color).tolist():
            sel = color == c
            yield source, c + 1, positions[sel], offset[sel]


@dataclass(frozen=True)
class SubstitutionPlan:
    """Leaf-to-root recovery of an acyclic coloring.

    Attributes
    ----------
    pairs : ndarray, shape (ne, 2)
        ``(leaf, parent)`` in reverse BFS order, grouped by tree.
    tree_offsets : ndarray
    positions : ndarray, shape (ne, 2)
        Stored positions of entry ``(leaf, parent)`` and of its mirror, or
        for bicoloring the single position of the ``J`` entry (twice).
    sources : ndarray
        Column-major linear index of ``B_s[leaf, color[parent]]``; for
        bicoloring it indexes ``B_r`` when ``leaf`` is a column vertex and
        ``B_c`` otherwise.
    from_rows : ndarray of bool or None
        Bicoloring only: True where the source is ``B_r``.
    diagonal : tuple of ndarray
        ``(positions, sources)`` of diagonal entries, read directly.
    """

    mode: str
    nnz: int
    n_vertices: int
    pairs: np.ndarray
    tree_offsets: np.ndarray
    positions: np.ndarray
    sources: np.ndarray
    from_rows: np.ndarray | None
    diagonal: tuple
    b_shape: tuple
    triangle_mask: dict


def plan_substitution(result):
    """Precompute the reverse-BFS traversal for acyclic or acyclic-bicoloring results."""
    plan = result.recovery
    if not isinstance(plan, ReverseBfsPlan):
        raise ValueError("substitution needs a reverse BFS plan")
    p = result.pattern
    g = result.graph
    pairs = plan.orders
    u, v = pairs[:, 0], pairs[:, 1]
    rows, cols = p.row_idx, p.col_idx
    if result.mode == "acyclic":
        color = result.coloring.color
        n = p.n_cols
        lookup = {}
        for pos, (i, j) in enumerate(zip(rows.tolist(), cols.tolist())):
            lookup[(i, j)] = pos
        positions = np.array(
            [(lookup[(a, b)], lookup[(b, a)]) for a, b in zip(u.tolist(), v.tolist())],
            dtype=np.int64,
        ).reshape(-1, 2)
        if np.any(color[v] == 0):
            raise ValueError("a parent vertex has the neutral color")
        sources = _linear(u, color[v] - 1, n)
        diag = np.flatnonzero(rows == cols)
        dsrc = _linear(rows[diag], color[rows[diag]] - 1, n)
        masks = {"lower": rows >= cols, "upper": rows <= cols}
        return SubstitutionPlan("acyclic", p.nnz, n, pairs, plan.tree_offsets, positions,
                                sources, None, (diag, dsrc), (n, result.coloring.num_colors),
                                masks)
    if result.mode == "acyclic-bicoloring":
        bc = result.bicoloring
        m, n = p.shape
        ends = g.edges
        lookup = {(int(a), int(b)): e for e, (a, b) in enumerate(ends.tolist())}
        lo, hi = np.minimum(u, v), np.maximum(u, v)
        e = np.array([lookup[(a, b)] for a, b in zip(lo.tolist(), hi.tolist())], dtype=np.int64)
        positions = np.stack([e, e], axis=1).reshape(-1, 2)
        sym = bc.sym_colors
        if np.any(sym[v] == 0):
            raise ValueError("a parent vertex has the neutral color")
        from_rows = u < n
        sources = np.empty(len(u), dtype=np.int64)
        # column vertex u reads B_r[row color, u]; row vertex u reads B_c[u - n, column color]
        ur, vr = u[from_rows], v[from_rows]
        sources[from_rows] = _linear(bc.sym_to_row[sym[vr]] - 1, ur, bc.num_row_colors)
        uc, vc = u[~from_rows], v[~from_rows]
        sources[~from_rows] = _linear(uc - n, bc.sym_to_col[sym[vc]] - 1, m)
        empty = np.zeros(0, dtype=np.int64)
        full = np.ones(p.nnz, dtype=bool)
        return SubstitutionPlan("acyclic-bicoloring", p.nnz, n + m, pairs, plan.tree_offsets,
                                positions, sources, from_rows, (empty, empty),
                                ((bc.num_row_colors, n), (m, bc.num_col_colors)),
                                {"lower": full, "upper": full})
    raise ValueError(f"no substitution plan for mode {result.mode!r}")


def decompress_substitution(b, plan, *, out=None, mask=None):
    """Values on the stored positions, recovered tree by tree.

    For every pair ``(u, v)`` in order, ``A[u, v] = B_s[u, color[v]] - acc[u]``
    and then ``acc[v] += A[u, v]``, where ``acc`` sums the already recovered
    tree edges at each vertex and is reset between trees.
    """
    if plan.from_rows is None:
        flat = _flat(b, plan.b_shape).tolist()
        flat_r = flat_c = None
    else:
        b_r, b_c = b
        flat_r = _flat(b_r, plan.b_shape[0]).tolist()
        flat_c = _flat(b_c, plan.b_shape[1]).tolist()
        flat = None
    if out is None:
        parts = b if plan.from_rows is not None else (b,)
        out = np.zeros(plan.nnz, dtype=np.result_type(*(np.asarray(x).dtype for x in parts)))
    write = np.ones(plan.nnz, dtype=bool) if mask is None else mask
    dpos, dsrc = plan.diagonal
    keep = write[dpos]
    if len(dpos):
        out[dpos[keep]] = np.asarray(flat)[dsrc[keep]]

    pairs = plan.pairs.tolist()
    positions = plan.positions.tolist()
    sources = plan.sources.tolist()
    from_rows = None if plan.from_rows is None else plan.from_rows.tolist()
    write = write.tolist()
    acc = [0] * plan.n_vertices
    off = plan.tree_offsets.tolist()
    for k in range(len(off) - 1):
        touched = []
        for t in range(off[k], off[k + 1]):
            u, v = pairs[t]
            if from_rows is None:
                s = flat[sources[t]]
            else:
                s = flat_r[sources[t]] if from_rows[t] else flat_c[sources[t]]
            val = s - acc[u]
            acc[v] += val
            touched.append(v)
            p1, p2 = positions[t]
            if write[p1]:
                out[p1] = val
            if write[p2]:
                out[p2] = val
        for v in touched:
            acc[v] = 0
    return out


def decompress_triangle(b, plan, which="lower"):
    """Recover only the entries of one triangle.

    Returns ``(positions, values)`` for the stored positions with
    ``row >= col`` (``"lower"``) or ``row <= col`` (``"upper"``). For a
    bicoloring the matrix ``J`` is the lower triangle of the augmented
    matrix, so every stored position of ``J`` is returned.
    """
    if which not in ("lower", "upper"):
        raise ValueError("which must be 'lower' or 'upper'")
    if isinstance(plan, SubstitutionPlan):
        mask = plan.triangle_mask[which]
        out = decompress_substitution(b, plan, mask=mask)
        pos = np.flatnonzero(mask)
        return pos, out[pos]
    if plan.mode == "star-bicoloring":
        return np.arange(plan.nnz), decompress_direct(b, plan)
    if plan.triangle_mask is None:
        raise ValueError("triangle decompression needs a symmetric or bicoloring plan")
    pos = np.flatnonzero(plan.triangle_mask[which])
    return pos, _flat(b, plan.b_shape)[plan.compressed_indices[pos]]


def make_plan(result):
    """Direct plan for column, row and star modes, substitution plan otherwise."""
    if result.mode in ("acyclic", "acyclic-bicoloring"):
        return plan_substitution(result)
    return plan_direct(result)


def decompress(b, plan):
    """Recover all stored values with whichever plan kind ``plan`` is."""
    if isinstance(plan, SubstitutionPlan):
        return decompress_substitution(b, plan)
    return decompress_direct(b, plan)
