"""
How the vertex ordering changes the color count
================================================

Greedy coloring depends on the order in which vertices are visited. This
script colors the two bundled test matrices with every ordering and mode.
"""

from pathlib import Path

from sparsecolor import ORDERINGS, color, read_mtx

data = Path(__file__).resolve().parent.parent / "tests" / "data"
modes = ("column", "row", "star-bicoloring", "acyclic-bicoloring")

for name in ("west0067", "lp_adlittle"):
    pattern, _ = read_mtx(data / f"{name}.mtx")
    print(f"\n{name}: {pattern.n_rows} x {pattern.n_cols}, {pattern.nnz} nonzeros")
    print(f"{'ordering':24s}" + "".join(f"{m:>20s}" for m in modes))
    for order in ORDERINGS:
        counts = [color(pattern, m, order, seed=0).num_colors for m in modes]
        print(f"{order:24s}" + "".join(f"{c:>20d}" for c in counts))
