"""
Bicoloring a matrix with a dense row and a dense column
========================================================

Column coloring of an m x n matrix with a dense row needs n colors, and row
coloring with a dense column needs m. Coloring rows and columns together
lets the dense row be read from one row product and everything else from one
column product.
"""

import numpy as np

from sparsecolor import SparsityPatternCSC, color, compress, decompress, make_plan, verify_result

rng = np.random.default_rng(0)
m, n = 6, 12
a = np.zeros((m, n))
a[0, :] = rng.integers(1, 10, n)
a[:, 0] = rng.integers(1, 10, m)
pattern = SparsityPatternCSC.from_dense(a != 0)
values = a[pattern.row_idx, pattern.col_idx]

print("column coloring:", color(pattern, "column").num_colors, "colors")
print("row coloring:   ", color(pattern, "row").num_colors, "colors")

for mode in ("star-bicoloring", "acyclic-bicoloring"):
    r = color(pattern, mode)
    bc = r.bicoloring
    print(f"{mode}: {bc.num_row_colors} row + {bc.num_col_colors} column colors")
    print("  row colors:   ", bc.row_colors)
    print("  column colors:", bc.col_colors)

    # one product from each side: B_r = V^T A and B_c = A U
    b_r, b_c = compress(r, values)
    recovered = decompress((b_r, b_c), make_plan(r))
    print("  exact recovery:", np.array_equal(recovered, values))
    print("  oracle:", verify_result(r) or "ok")
