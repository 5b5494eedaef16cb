"""Greedy coloring kernels.

Colors are positive integers starting at 1; 0 is reserved for the neutral
color introduced later by post-processing. Every kernel visits vertices in the
given order and assigns the smallest color not forbidden by the vertices
colored so far. The ``forbidden`` marker array holds the id of the vertex
being colored, so it never needs to be cleared between vertices.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .forest import Forest
from .pattern import _side

__all__ = [
    "Coloring",
    "StarSet",
    "partial_distance2_coloring",
    "star_coloring",
    "acyclic_coloring",
]


def _frozen(a):
    arr = np.asarray(a, dtype=np.int64)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True)
class Coloring:
    """Per-vertex colors and their count.

    Attributes
    ----------
    color : ndarray of int64
        ``color[v]`` is in ``1 .. num_colors``, or 0 for a neutral vertex.
    num_colors : int
    """

    color: np.ndarray
    num_colors: int

    @classmethod
    def from_list(cls, colors):
        arr = _frozen(colors)
        return cls(arr, int(arr.max(initial=0)))

    def __len__(self):
        return len(self.color)


@dataclass(frozen=True)
class StarSet:
    """Two-colored stars found by star coloring.

    Attributes
    ----------
    star : ndarray of int64
        Star id of every edge index.
    hub : ndarray of int64
        Hub vertex of every star. A star made of a single edge has no
        designated hub; it stores ``~w`` (that is ``-w - 1``) for one of its
        endpoints ``w``, which keeps the value negative even for vertex 0.
    """

    star: np.ndarray
    hub: np.ndarray

    @property
    def num_stars(self):
        return len(self.hub)

    def is_trivial(self, s):
        return self.hub[s] < 0

    def hub_vertex(self, s):
        """Hub of star ``s`` with the trivial-star encoding removed."""
        h = int(self.hub[s])
        return ~h if h < 0 else h


def _smallest_allowed(forbidden, v):
    c = 1
    while forbidden[c] == v:
        c += 1
    return c


def _check_order(order, n):
    order = np.asarray(order, dtype=np.int64)
    if order.shape != (n,) or not np.array_equal(np.sort(order), np.arange(n)):
        raise ValueError(f"order must be a permutation of range({n})")
    return order.tolist()


def partial_distance2_coloring(g, side, order):
    """Color one side of a bipartite graph so that same-colored vertices share no neighbor.

    Parameters
    ----------
    g : BipartiteGraph
    side : {"columns", "rows"}
    order : array_like of int
        Permutation of the vertices of ``side``.

    Returns
    -------
    Coloring
    """
    side = _side(side)
    here = g.adjacency(side)
    there = g.adjacency("rows" if side == "columns" else "columns")
    n = len(here)
    color = [0] * n
    forbidden = [-1] * (n + 2)
    for v in _check_order(order, n):
        for w in here[v]:
            for x in there[w]:
                c = color[x]
                if c:
                    forbidden[c] = v
        color[v] = _smallest_allowed(forbidden, v)
    return Coloring.from_list(color)


def star_coloring(g, order):
    """Greedy star coloring that records the two-colored stars.

    Parameters
    ----------
    g : AdjacencyGraph
    order : array_like of int
        Permutation of the vertices.

    Returns
    -------
    Coloring
        Every path on four vertices uses at least three colors.
    StarSet
        Star id of every edge and the hub of every star.
    """
    n = g.n_vertices
    adj = g.adjacency
    eidx = g.edge_lists
    color = [0] * n
    forbidden = [-1] * (n + 2)
    first_neighbor = [(-1, -1, -1)] * (n + 2)
    treated = [-1] * n
    star = [-1] * g.num_edges
    hub = []

    for v in _check_order(order, n):
        for w, e_vw in zip(adj[v], eidx[v]):
            cw = color[w]
            if not cw:
                continue
            forbidden[cw] = v
            p, q, _ = first_neighbor[cw]
            if p == v:
                # second neighbor of v with color cw: both w and q would become
                # hubs of a bicolored path, so forbid every color around them
                if treated[q] != v:
                    for x in adj[q]:
                        if color[x]:
                            forbidden[color[x]] = v
                    treated[q] = v
                for x in adj[w]:
                    if color[x]:
                        forbidden[color[x]] = v
                treated[w] = v
            else:
                first_neighbor[cw] = (v, w, e_vw)
                for x, e_wx in zip(adj[w], eidx[w]):
                    if x != v and color[x] and x == hub[star[e_wx]]:
                        forbidden[color[x]] = v
        cv = _smallest_allowed(forbidden, v)
        color[v] = cv

        for w, e_vw in zip(adj[v], eidx[v]):
            cw = color[w]
            if not cw:
                continue
            for x, e_wx in zip(adj[w], eidx[w]):
                if x != v and color[x] == cv:
                    s = star[e_wx]
                    hub[s] = w
                    star[e_vw] = s
                    break
            else:
                p, q, e_pq = first_neighbor[cw]
                if p == v and q != w:
                    s = star[e_pq]
                    hub[s] = v
                    star[e_vw] = s
                else:
                    hub.append(~w)
                    star[e_vw] = len(hub) - 1
    return Coloring.from_list(color), StarSet(_frozen(star), _frozen(hub))


def acyclic_coloring(g, order):
    """Greedy acyclic coloring that groups edges into two-colored trees.

    Parameters
    ----------
    g : AdjacencyGraph
    order : array_like of int
        Permutation of the vertices.

    Returns
    -------
    Coloring
        Proper coloring in which every cycle uses at least three colors.
    Forest
        Union-find forest over edge indices; its trees are the connected
        components of the two-colored subgraphs.
    """
    n = g.n_vertices
    adj = g.adjacency
    eidx = g.edge_lists
    color = [0] * n
    forbidden = [-1] * (n + 2)
    first_neighbor = [(-1, -1, -1)] * (n + 2)
    first_visit_to_tree = [(-1, -1)] * g.num_edges
    forest = Forest(g.num_edges)
    find_root = forest.find_root

    for v in _check_order(order, n):
        for w in adj[v]:
            if color[w]:
                forbidden[color[w]] = v
        for w in adj[v]:
            if not color[w]:
                continue
            for x, e_wx in zip(adj[w], eidx[w]):
                cx = color[x]
                if cx and forbidden[cx] != v:
                    root = find_root(e_wx)
                    p, q = first_visit_to_tree[root]
                    if p != v:
                        first_visit_to_tree[root] = (v, w)
                    elif q != w:
                        # v would close a two-colored cycle through this tree
                        forbidden[cx] = v
        cv = _smallest_allowed(forbidden, v)
        color[v] = cv

        for w, e_vw in zip(adj[v], eidx[v]):
            cw = color[w]
            if not cw:
                continue
            p, q, e_pq = first_neighbor[cw]
            if p != v:
                first_neighbor[cw] = (v, w, e_vw)
            else:
                forest.root_union(find_root(e_vw), find_root(e_pq))
        for w, e_vw in zip(adj[v], eidx[v]):
            if not color[w]:
                continue
            for x, e_wx in zip(adj[w], eidx[w]):
                if x != v and color[x] == cv:
                    r_vw = find_root(e_vw)
                    r_wx = find_root(e_wx)
                    if r_vw != r_wx:
                        forest.root_union(r_vw, r_wx)
    return Coloring.from_list(color), forest
