"""Two-colored structures and neutral-color post-processing.

A star or acyclic coloring splits the edges into two-colored structures:
stars for star coloring, trees for acyclic coloring. Decompression only reads
the color of a star's hub, or of the non-leaf vertices of a tree, so a color
that no structure needs (and no diagonal entry needs) can be replaced by the
neutral color 0. Single-edge structures can be recovered from either endpoint;
they are handled last so that they reuse colors that are already required.
"""
from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .coloring import Coloring, StarSet, _frozen

__all__ = [
    "TreeSet",
    "ReverseBfsPlan",
    "StructureSets",
    "PREFERENCES",
    "build_trees",
    "reverse_bfs",
    "classify_structures",
    "post_process",
]

PREFERENCES = ("first", "rows", "columns")


@dataclass(frozen=True)
class TreeSet:
    """Packed adjacency of the two-colored trees of a forest.

    Attributes
    ----------
    nvmax : int
        Number of vertices of the largest tree.
    tree_edge_indices : ndarray
        Tree ``k`` has ``tree_edge_indices[k+1] - tree_edge_indices[k]`` edges
        and its vertices occupy the slots ``tree_edge_indices[k] + k`` through
        ``tree_edge_indices[k+1] + k`` of ``tree_vertices``.
    tree_vertices : ndarray
        Vertices grouped by tree, ``ne + nt`` entries.
    tree_neighbor_indices : ndarray
        Slot ``i`` of ``tree_vertices`` has its in-tree neighbors at
        ``tree_neighbors[tree_neighbor_indices[i]:tree_neighbor_indices[i+1]]``.
    tree_neighbors : ndarray
        ``2 * ne`` entries.
    """

    nvmax: int
    tree_edge_indices: np.ndarray
    tree_vertices: np.ndarray
    tree_neighbor_indices: np.ndarray
    tree_neighbors: np.ndarray

    @property
    def num_trees(self):
        return len(self.tree_edge_indices) - 1

    def vertices(self, k):
        lo = int(self.tree_edge_indices[k]) + k
        hi = int(self.tree_edge_indices[k + 1]) + k
        return self.tree_vertices[lo:hi + 1]

    def neighbors_of_slot(self, slot):
        return self.tree_neighbors[self.tree_neighbor_indices[slot]:self.tree_neighbor_indices[slot + 1]]


@dataclass(frozen=True)
class ReverseBfsPlan:
    """Leaf-to-root edge order of every tree.

    Attributes
    ----------
    orders : ndarray, shape (ne, 2)
        Pairs ``(leaf, parent)``; when a pair is reached, ``leaf`` has no
        unprocessed tree edge other than the one to ``parent``.
    tree_offsets : ndarray
        Pairs of tree ``k`` are ``orders[tree_offsets[k]:tree_offsets[k+1]]``.
    is_star : ndarray of bool
        Trees of depth one, including single edges.
    """

    orders: np.ndarray
    tree_offsets: np.ndarray
    is_star: np.ndarray

    @property
    def num_trees(self):
        return len(self.is_star)

    def tree(self, k):
        return self.orders[self.tree_offsets[k]:self.tree_offsets[k + 1]]


@dataclass(frozen=True)
class StructureSets:
    """Two-colored structures sorted by what decompression needs from them.

    Attributes
    ----------
    mode : {"star", "acyclic"}
    trees : list of (int, int)
        One edge of each tree of depth at least two; both colors are needed.
    stars : list of (int, int)
        ``(structure id, hub)`` of each star with at least two edges.
    edges : list of (int, int, int)
        ``(structure id, hub, other)`` of each single-edge structure, with
        the endpoint currently used for recovery first.
    source : StarSet or ReverseBfsPlan
        Recovery metadata the structures were read from.
    """

    mode: str
    trees: list
    stars: list
    edges: list
    source: object


def build_trees(g, forest):
    """Recover the vertices and in-tree adjacency of every tree of ``forest``.

    Trees are numbered in order of their smallest edge index.
    """
    ne = g.num_edges
    find_root = forest.find_root
    root_to_tree = [-1] * ne
    counts = [0] * (forest.nt + 1)
    nr = 0
    for e in range(ne):
        root = find_root(e)
        if root_to_tree[root] < 0:
            root_to_tree[root] = nr
            nr += 1
        counts[root_to_tree[root] + 1] += 1
    nt = nr
    nvmax = max(counts) + 1 if nt else 0

    # last filled vertex slot and next free neighbor slot of each tree
    vertex_position = [-1] * nt
    neighbor_position = [0] * nt
    for k in range(1, nt):
        vertex_position[k] = vertex_position[k - 1] + counts[k] + 1
        neighbor_position[k] = neighbor_position[k - 1] + 2 * counts[k]

    tree_vertices = [0] * (ne + nt)
    tree_neighbor_indices = [0] * (ne + nt + 1)
    tree_neighbors = [0] * (2 * ne)
    visited = [-1] * nt
    adj, eidx = g.adjacency, g.edge_lists
    for j in range(g.n_vertices):
        for i, e in zip(adj[j], eidx[j]):
            t = root_to_tree[find_root(e)]
            vertex_index = vertex_position[t]
            if visited[t] != j:
                visited[t] = j
                vertex_index += 1
                vertex_position[t] = vertex_index
                tree_vertices[vertex_index] = j
            tree_neighbors[neighbor_position[t]] = i
            neighbor_position[t] += 1
            tree_neighbor_indices[vertex_index + 1] += 1

    tree_edge_indices = np.cumsum(counts[:nt + 1], dtype=np.int64)
    return TreeSet(
        nvmax=nvmax,
        tree_edge_indices=_frozen(tree_edge_indices),
        tree_vertices=_frozen(tree_vertices),
        tree_neighbor_indices=_frozen(np.cumsum(tree_neighbor_indices, dtype=np.int64)),
        tree_neighbors=_frozen(tree_neighbors),
    )


def reverse_bfs(ts):
    """Prune every tree leaf by leaf and record the removed edges."""
    tei = ts.tree_edge_indices.tolist()
    tv = ts.tree_vertices.tolist()
    tni = ts.tree_neighbor_indices.tolist()
    tn = ts.tree_neighbors.tolist()
    nt = ts.num_trees
    ne = tei[-1] if tei else 0
    orders = []
    is_star = [False] * nt
    degrees = {}
    reverse_mapping = {}
    for k in range(nt):
        queue = []
        for slot in range(tei[k] + k, tei[k + 1] + k + 1):
            vertex = tv[slot]
            degree = tni[slot + 1] - tni[slot]
            degrees[vertex] = degree
            reverse_mapping[vertex] = slot
            if degree == 1:
                queue.append(vertex)
        nv_tree = tei[k + 1] - tei[k] + 1
        is_star[k] = len(queue) >= nv_tree - 1
        head = 0
        while head < len(queue):
            leaf = queue[head]
            head += 1
            degrees[leaf] = 0
            slot = reverse_mapping[leaf]
            for neighbor in tn[tni[slot]:tni[slot + 1]]:
                if degrees[neighbor] != 0:
                    orders.append((leaf, neighbor))
                    degrees[neighbor] -= 1
                    if degrees[neighbor] == 1:
                        queue.append(neighbor)
    out = np.array(orders, dtype=np.int64).reshape(ne, 2)
    out.setflags(write=False)
    return ReverseBfsPlan(out, _frozen(tei if tei else [0]), np.array(is_star, dtype=bool))


def classify_structures(g, mode, source):
    """Split the structures of a coloring into normal trees, normal stars and single edges.

    Parameters
    ----------
    g : AdjacencyGraph
    mode : {"star", "acyclic"}
    source : StarSet or ReverseBfsPlan
        Output of star coloring, or the reverse BFS plan of an acyclic
        coloring's forest.
    """
    trees, stars, edges = [], [], []
    if mode == "star":
        if not isinstance(source, StarSet):
            raise TypeError("star mode needs a StarSet")
        hub = source.hub.tolist()
        single = {}
        for e, s in enumerate(source.star.tolist()):
            if hub[s] < 0:
                single[s] = e
        ends = g.edges
        for s, h in enumerate(hub):
            if h >= 0:
                stars.append((s, h))
            else:
                a, b = (int(x) for x in ends[single[s]])
                h = ~h
                edges.append((s, h, b if h == a else a))
    elif mode == "acyclic":
        if not isinstance(source, ReverseBfsPlan):
            raise TypeError("acyclic mode needs a ReverseBfsPlan")
        off = source.tree_offsets.tolist()
        for k in range(source.num_trees):
            leaf, parent = (int(x) for x in source.orders[off[k]])
            n_edges = off[k + 1] - off[k]
            if n_edges == 1:
                edges.append((k, parent, leaf))
            elif source.is_star[k]:
                stars.append((k, parent))
            else:
                trees.append((leaf, parent))
    else:
        raise ValueError(f"mode must be 'star' or 'acyclic', got {mode!r}")
    return StructureSets(mode, trees, stars, edges, source)


def _pick(a, b, prefer, split):
    """Endpoint kept when either choice is possible."""
    if prefer == "first":
        return min(a, b)
    if split is None:
        raise ValueError("a row/column preference needs the number of column vertices")
    # neutralizing rows keeps the column endpoint (ids below split), and vice versa
    want_column = prefer == "rows"
    if (a < split) == want_column:
        return a
    if (b < split) == want_column:
        return b
    return min(a, b)


def post_process(g, coloring, structures, *, prefer="first", split=None):
    """Neutralize every color that decompression does not read.

    Parameters
    ----------
    g : AdjacencyGraph
        Supplies the diagonal flags.
    coloring : Coloring
        Star or acyclic coloring without neutral vertices.
    structures : StructureSets
        Structures of the same coloring.
    prefer : {"first", "rows", "columns"}
        Which endpoint recovers a single edge when neither color is needed
        yet: the lower vertex id, or the endpoint whose side keeps its color
        (``"rows"`` neutralizes rows and keeps columns).
    split : int, optional
        Vertices below ``split`` are columns, the rest rows. Required for
        ``"rows"`` and ``"columns"``.

    Returns
    -------
    Coloring
        Surviving colors renumbered ``1 .. k`` in their original order,
        neutral vertices set to 0.
    StarSet or ReverseBfsPlan
        ``structures.source`` with single-edge structures reoriented so that
        their recovery endpoint keeps its color.
    """
    if prefer not in PREFERENCES:
        raise ValueError(f"prefer must be one of {PREFERENCES}, got {prefer!r}")
    color = coloring.color.tolist()
    used = [False] * (coloring.num_colors + 1)
    for k in np.flatnonzero(g.has_diagonal).tolist():
        used[color[k]] = True
    for i, j in structures.trees:
        used[color[i]] = True
        used[color[j]] = True
    for _, h in structures.stars:
        used[color[h]] = True

    chosen = {}
    for sid, a, b in structures.edges:
        ua, ub = used[color[a]], used[color[b]]
        if ua and ub:
            h = _pick(a, b, prefer, split)
        elif ua:
            h = a
        elif ub:
            h = b
        else:
            h = _pick(a, b, prefer, split)
            used[color[h]] = True
        chosen[sid] = (h, b if h == a else a)

    offsets = [0] * (coloring.num_colors + 1)
    num_neutral = 0
    for c in range(1, coloring.num_colors + 1):
        if not used[c]:
            num_neutral += 1
        else:
            offsets[c] = num_neutral
    new = [color[v] - offsets[color[v]] if used[color[v]] else 0 for v in range(len(color))]
    result = Coloring(_frozen(new), coloring.num_colors - num_neutral)
    return result, _reorient(structures.source, chosen)


def _reorient(source, chosen):
    if isinstance(source, StarSet):
        hub = source.hub.copy()
        for s, (h, _) in chosen.items():
            hub[s] = ~h
        return StarSet(source.star, _frozen(hub))
    orders = source.orders.copy()
    off = source.tree_offsets
    for k, (h, other) in chosen.items():
        orders[off[k]] = (other, h)
    orders.setflags(write=False)
    return replace(source, orders=orders)
