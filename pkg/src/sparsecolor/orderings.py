"""Vertex orderings for the greedy coloring kernels.

The three dynamic orders (smallest last, incidence degree, dynamic largest
first) share one loop: every unordered vertex sits in a bucket indexed by its
current dynamic degree, the next vertex is popped from the lowest or highest
non-empty bucket, and the degrees of its unordered neighbors move by one.

Two bucket structures are provided. :class:`StackBuckets` keeps one growable
list per degree and appends moved vertices at the end, as ColPack does; it is
the default because published color counts were produced with it.
:class:`VectorBuckets` stores every bucket inside one array of fixed length,
where a bucket shrinks from one end while its neighbor grows into the freed
slot. Both pop from the right end of a bucket, so they agree on bucket
contents at every step but may pick different vertices among equal degrees.
"""
from __future__ import annotations

import numpy as np

from .pattern import AdjacencyGraph, BipartiteGraph

__all__ = [
    "ORDERINGS",
    "StackBuckets",
    "VectorBuckets",
    "order_vertices",
    "normalize_order",
]

ORDERINGS = (
    "natural",
    "random",
    "largest_first",
    "smallest_last",
    "incidence_degree",
    "dynamic_largest_first",
)

_ALIASES = {"lf": "largest_first", "sl": "smallest_last", "id": "incidence_degree",
            "dlf": "dynamic_largest_first", "n": "natural"}


def normalize_order(order):
    key = str(order).lower().replace("-", "_")
    key = _ALIASES.get(key, key)
    if key not in ORDERINGS:
        raise ValueError(f"unknown ordering {order!r}; expected one of {ORDERINGS}")
    return key


class StackBuckets:
    """One stack per degree; a moved vertex is appended to its new bucket."""

    def __init__(self, degrees, max_degree=None):
        degrees = [int(d) for d in degrees]
        if max_degree is None:
            max_degree = max(degrees, default=0)
        self.max_degree = int(max_degree)
        self.degree = degrees
        self.buckets = [[] for _ in range(self.max_degree + 1)]
        self.position = [0] * len(degrees)
        for v, d in enumerate(degrees):
            self.position[v] = len(self.buckets[d])
            self.buckets[d].append(v)

    def __len__(self):
        return sum(len(b) for b in self.buckets)

    def nonempty(self, d):
        return bool(self.buckets[d])

    def _detach(self, v):
        bucket = self.buckets[self.degree[v]]
        p = self.position[v]
        w = bucket[-1]
        bucket[p] = w
        self.position[w] = p
        bucket.pop()

    def shift(self, v, step):
        """Move ``v`` one bucket up (``step=+1``) or down (``step=-1``)."""
        d = self.degree[v] + step
        if step not in (1, -1):
            raise ValueError("step must be +1 or -1")
        if d < 0 or d > self.max_degree:
            raise ValueError(f"cannot move vertex {v} to degree {d}")
        self._detach(v)
        self.position[v] = len(self.buckets[d])
        self.buckets[d].append(v)
        self.degree[v] = d

    def pop(self, d):
        """Remove and return the most recently inserted vertex of bucket ``d``."""
        v = self.buckets[d].pop()
        self.degree[v] = -1
        return v

    def bucket_sets(self):
        return [set(b) for b in self.buckets]


class VectorBuckets:
    """All buckets packed in one vector, ordered by degree.

    Bucket ``d`` occupies ``bucketvec[low[d]:high[d] + 1]``. Moving up shrinks
    bucket ``d`` from the right and grows bucket ``d + 1`` to the left; moving
    down shrinks from the left and grows bucket ``d - 1`` to the right. Popped
    vertices leave gaps between buckets, which later moves fill.
    """

    def __init__(self, degrees, max_degree=None):
        degrees = [int(d) for d in degrees]
        if max_degree is None:
            max_degree = max(degrees, default=0)
        self.max_degree = int(max_degree)
        self.degree = degrees
        counts = [0] * (self.max_degree + 1)
        for d in degrees:
            counts[d] += 1
        self.low = [0] * (self.max_degree + 1)
        self.high = [0] * (self.max_degree + 1)
        start = 0
        for d, c in enumerate(counts):
            self.low[d] = start
            self.high[d] = start + c - 1
            start += c
        self.bucketvec = [0] * len(degrees)
        self.position = [0] * len(degrees)
        fill = list(self.low)
        for v, d in enumerate(degrees):
            self.bucketvec[fill[d]] = v
            self.position[v] = fill[d]
            fill[d] += 1

    def __len__(self):
        return sum(max(0, h - lo + 1) for lo, h in zip(self.low, self.high))

    def nonempty(self, d):
        return self.high[d] >= self.low[d]

    def shift(self, v, step):
        """Move ``v`` one bucket up (``step=+1``) or down (``step=-1``)."""
        d = self.degree[v]
        if step not in (1, -1):
            raise ValueError("step must be +1 or -1")
        if d + step < 0 or d + step > self.max_degree:
            raise ValueError(f"cannot move vertex {v} to degree {d + step}")
        vec, pos = self.bucketvec, self.position
        p = pos[v]
        if step == 1:
            end = self.high[d]
            w = vec[end]
            vec[p] = w
            pos[w] = p
            self.high[d] = end - 1
            target = self.low[d + 1] - 1
            self.low[d + 1] = target
        else:
            start = self.low[d]
            w = vec[start]
            vec[p] = w
            pos[w] = p
            self.low[d] = start + 1
            target = self.high[d - 1] + 1
            self.high[d - 1] = target
        vec[target] = v
        pos[v] = target
        self.degree[v] = d + step

    def pop(self, d):
        """Remove and return the vertex at the right end of bucket ``d``."""
        end = self.high[d]
        v = self.bucketvec[end]
        self.high[d] = end - 1
        self.degree[v] = -1
        return v

    def bucket_sets(self):
        return [set(self.bucketvec[lo:h + 1]) for lo, h in zip(self.low, self.high)]


_BUCKETS = {"stack": StackBuckets, "vector": VectorBuckets}


def _dynamic_order(adjacency, kind, buckets):
    n = len(adjacency)
    if kind == "incidence_degree":
        degrees = [0] * n
    else:
        degrees = [len(a) for a in adjacency]
    maxdeg = max((len(a) for a in adjacency), default=0)
    b = _BUCKETS[buckets](degrees, maxdeg)
    ordered = [False] * n
    pi = [0] * n

    if kind == "smallest_last":
        d = 0
        for slot in range(n - 1, -1, -1):
            while not b.nonempty(d):
                d += 1
            v = b.pop(d)
            ordered[v] = True
            pi[slot] = v
            for u in adjacency[v]:
                if not ordered[u]:
                    b.shift(u, -1)
            d = max(d - 1, 0)
    else:
        step = 1 if kind == "incidence_degree" else -1
        d = maxdeg
        for slot in range(n):
            while not b.nonempty(d):
                d -= 1
            v = b.pop(d)
            ordered[v] = True
            pi[slot] = v
            for u in adjacency[v]:
                if not ordered[u]:
                    b.shift(u, step)
            if step == 1:
                d = min(d + 1, maxdeg)
    return pi


def _adjacency_of(graph, side):
    if isinstance(graph, AdjacencyGraph):
        return graph.adjacency
    if isinstance(graph, BipartiteGraph):
        if side is None:
            raise ValueError("a side ('rows' or 'columns') is required for bipartite graphs")
        return graph.distance2_adjacency(side)
    return [list(a) for a in graph]


def order_vertices(graph, order="natural", *, side=None, seed=0, buckets="stack"):
    """Permutation of the vertices to color, as an int64 array.

    Parameters
    ----------
    graph : AdjacencyGraph, BipartiteGraph or list of neighbor lists
        For a bipartite graph the vertices of ``side`` are ordered and their
        degrees are distance-2 degrees.
    order : str
        One of :data:`ORDERINGS` (hyphens and the usual abbreviations are
        accepted).
    seed : int
        Seed of the random ordering; ignored otherwise.
    buckets : {"stack", "vector"}
        Bucket structure used by the dynamic orders.
    """
    order = normalize_order(order)
    if buckets not in _BUCKETS:
        raise ValueError(f"buckets must be 'stack' or 'vector', got {buckets!r}")
    if order == "natural":
        if isinstance(graph, AdjacencyGraph):
            n = graph.n_vertices
        elif isinstance(graph, BipartiteGraph):
            n = graph.n_vertices(side)
        else:
            n = len(graph)
        return np.arange(n, dtype=np.int64)
    if order == "random":
        n = len(_adjacency_of(graph, side)) if not isinstance(graph, BipartiteGraph) \
            else graph.n_vertices(side)
        return np.random.default_rng(seed).permutation(n).astype(np.int64)

    adjacency = _adjacency_of(graph, side)
    if order == "largest_first":
        degrees = np.array([len(a) for a in adjacency], dtype=np.int64)
        return np.argsort(-degrees, kind="stable").astype(np.int64)
    return np.array(_dynamic_order(adjacency, order, buckets), dtype=np.int64)
