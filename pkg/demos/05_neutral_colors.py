"""
When an entry cannot be recovered
==================================

With neutral colors (0), a symmetric coloring recovers every entry exactly
when it has no zig-zag: each edge touches a colored vertex, neutral vertices
see distinct colors, and no path q - i - j - p alternates two colors. The
two checks below reach the same verdict, one on the graph and one on the
matrix.
"""

import numpy as np

from sparsecolor import SparsityPatternCSC, build_adjacency_graph, check_no_zigzag, check_nsop

# the path q - i - j - p
a = np.zeros((4, 4), dtype=bool)
for u in range(3):
    a[u, u + 1] = a[u + 1, u] = True
pattern = SparsityPatternCSC.from_dense(a)
graph = build_adjacency_graph(pattern)

for colors in ([1, 2, 1, 2], [1, 1, 2, 2], [1, 2, 2, 1], [1, 1, 1, 2], [1, 1, 2, 1], [0, 1, 0, 2]):
    graph_verdict = check_no_zigzag(graph, colors)
    matrix_verdict = check_nsop(pattern, colors)
    print(colors, "->", graph_verdict or "ok", "|", matrix_verdict or "ok")
