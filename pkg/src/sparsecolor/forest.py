"""Disjoint-set forest over edge indices.

Acyclic coloring uses it to group edges into two-colored trees. Roots are
found with full path compression and trees are merged by rank.
"""
from __future__ import annotations

import numpy as np

__all__ = ["Forest", "create_forest"]


class Forest:
    """Union-find structure on the edge indices ``0 .. ne - 1``.

    Attributes
    ----------
    parents : list of int
        ``parents[e] == e`` exactly when ``e`` is a root.
    ranks : list of int
        Upper bound on the height of the tree below each root.
    nt : int
        Current number of trees.
    """

    def __init__(self, ne):
        ne = int(ne)
        self.parents = list(range(ne))
        self.ranks = [0] * ne
        self.nt = ne

    def __len__(self):
        return len(self.parents)

    def find_root(self, index):
        parents = self.parents
        root = index
        while parents[root] != root:
            root = parents[root]
        while parents[index] != root:
            parents[index], index = root, parents[index]
        return root

    def root_union(self, root1, root2):
        """Merge two distinct trees given by their roots.

        On a rank tie ``root1`` becomes the parent and its rank grows by one.
        """
        if root1 == root2:
            raise ValueError("root_union needs two distinct roots")
        ranks = self.ranks
        if ranks[root1] < ranks[root2]:
            root1, root2 = root2, root1
        elif ranks[root1] == ranks[root2]:
            ranks[root1] += 1
        self.parents[root2] = root1
        self.nt -= 1

    def roots(self):
        """Root of every edge, as an int64 array (compresses all paths)."""
        return np.array([self.find_root(e) for e in range(len(self.parents))], dtype=np.int64)


def create_forest(ne):
    return Forest(ne)
