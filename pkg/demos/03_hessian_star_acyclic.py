"""
Symmetric Hessians: star versus acyclic coloring
=================================================

A Hessian is symmetric, so an entry can be read from column i or column j.
Star coloring makes every entry readable directly. Acyclic coloring needs
fewer colors but recovers some entries by substitution along two-colored
trees.
"""

import numpy as np

from sparsecolor import SparsityPatternCSC, color, compress, decompress, make_plan

# Hessian of sum((x[i] - x[j])**2) over the edges of a 6 x 6 grid, plus a quadratic term
k = 6
n = k * k
h = np.eye(n) * 0.5
for r in range(k):
    for c in range(k):
        v = r * k + c
        for w in ((v + 1) if c + 1 < k else None, (v + k) if r + 1 < k else None):
            if w is not None:
                h[v, v] += 2
                h[w, w] += 2
                h[v, w] = h[w, v] = -2
pattern = SparsityPatternCSC.from_dense(h != 0)
values = h[pattern.row_idx, pattern.col_idx]

for mode in ("star", "acyclic"):
    for order in ("natural", "smallest_last"):
        r = color(pattern, mode, order)
        b = compress(r, values)
        ok = np.allclose(decompress(b, make_plan(r)), values)
        print(f"{mode:8s} {order:14s} {r.num_colors} colors, B is {b.shape}, recovered: {ok}")

# without a diagonal, post-processing may drop colors that no entry needs
off = h.copy()
np.fill_diagonal(off, 0)
pattern = SparsityPatternCSC.from_dense(off != 0)
for mode in ("star", "acyclic"):
    before = color(pattern, mode).num_colors
    after = color(pattern, mode, postprocess=True).num_colors
    print(f"zero diagonal, {mode}: {before} colors, {after} after post-processing")
