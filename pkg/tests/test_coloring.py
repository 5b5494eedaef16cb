import itertools

import networkx as nx
import numpy as np
import pytest

from conftest import cycle_graph, path_graph, pattern, random_rect, random_symmetric
from sparsecolor import (
    Coloring,
    acyclic_coloring,
    build_adjacency_graph,
    build_bipartite_graph,
    order_vertices,
    partial_distance2_coloring,
    star_coloring,
)


def nx_graph(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n_vertices))
    h.add_edges_from(g.edges.tolist())
    return h


def proper(g, c):
    return all(c[a] != c[b] for a, b in g.edges.tolist())


def star_ok(g, c):
    # no path on four vertices is two-colored
    adj = g.adjacency
    for b in range(g.n_vertices):
        for a, cc in itertools.permutations(adj[b], 2):
            for d in adj[cc]:
                if d not in (a, b) and c[a] == c[cc] and c[b] == c[d]:
                    return False
    return True


def acyclic_ok(g, c):
    # every two-colored subgraph is a forest
    h = nx_graph(g)
    for p, q in itertools.combinations(set(c.tolist()), 2):
        sub = h.subgraph([v for v in h if c[v] in (p, q)])
        if not nx.is_forest(sub):
            return False
    return True


def distance2_ok(p, side, c):
    a = p.to_dense().astype(int)
    if side == "rows":
        a = a.T
    share = (a.T @ a) > 0
    np.fill_diagonal(share, False)
    i, j = np.nonzero(share)
    return bool(np.all(c[i] != c[j]))


def natural(n):
    return np.arange(n)


def test_distance2_identity():
    g = build_bipartite_graph(pattern(np.eye(5)))
    c = partial_distance2_coloring(g, "columns", natural(5))
    assert c.num_colors == 1
    assert c.color.tolist() == [1] * 5


def test_distance2_dense_row_and_column():
    a = np.zeros((6, 12), dtype=bool)
    a[0, :] = True
    g = build_bipartite_graph(pattern(a))
    assert partial_distance2_coloring(g, "columns", natural(12)).num_colors == 12
    a = np.zeros((6, 12), dtype=bool)
    a[:, 0] = True
    g = build_bipartite_graph(pattern(a))
    assert partial_distance2_coloring(g, "rows", natural(6)).num_colors == 6


def test_distance2_small_example():
    a = [[1, 1, 0], [0, 1, 1]]
    g = build_bipartite_graph(pattern(a))
    assert partial_distance2_coloring(g, "columns", natural(3)).color.tolist() == [1, 2, 1]


@pytest.mark.parametrize("side", ["rows", "columns"])
def test_distance2_random(rng, side):
    for _ in range(30):
        p = random_rect(rng, 40)
        g = build_bipartite_graph(p)
        pi = order_vertices(g, "smallest_last", side=side)
        c = partial_distance2_coloring(g, side, pi)
        assert distance2_ok(p, side, c.color)
        assert c.color.min() >= 1
        assert c.num_colors == c.color.max()


def test_star_path4():
    g = build_adjacency_graph(path_graph(4))
    c, stars = star_coloring(g, natural(4))
    assert c.color.tolist() == [1, 2, 1, 3]
    # edges (0,1) and (1,2) form one star centered at 1; (2,3) is trivial
    assert stars.star.tolist() == [0, 0, 1]
    assert stars.hub[0] == 1
    assert stars.is_trivial(1)
    assert stars.hub_vertex(1) == 2


def test_star_single_edge():
    g = build_adjacency_graph(path_graph(2))
    c, stars = star_coloring(g, natural(2))
    assert c.color.tolist() == [1, 2]
    assert stars.num_stars == 1
    assert stars.hub[0] < 0
    assert stars.hub_vertex(0) in (0, 1)


def test_acyclic_path4():
    g = build_adjacency_graph(path_graph(4))
    c, forest = acyclic_coloring(g, natural(4))
    assert c.color.tolist() == [1, 2, 1, 2]
    assert forest.nt == 1
    assert len(set(forest.roots().tolist())) == 1


def test_acyclic_cycle4():
    g = build_adjacency_graph(cycle_graph(4))
    c, _ = acyclic_coloring(g, natural(4))
    assert c.num_colors == 3
    assert acyclic_ok(g, c.color)


@pytest.mark.parametrize("kernel", [star_coloring, acyclic_coloring])
def test_graph_without_edges(kernel):
    g = build_adjacency_graph(pattern(np.eye(4)))
    c, _ = kernel(g, natural(4))
    assert c.num_colors == 1
    assert c.color.tolist() == [1] * 4


@pytest.mark.parametrize("order", ["natural", "random", "smallest_last", "largest_first"])
def test_star_random_graphs(rng, order):
    for _ in range(25):
        g = build_adjacency_graph(random_symmetric(rng, 40, diagonal="random"))
        c, stars = star_coloring(g, order_vertices(g, order, seed=1))
        assert c.color.min() >= 1
        assert proper(g, c.color)
        assert star_ok(g, c.color)
        assert len(stars.star) == g.num_edges
        for e, (a, b) in enumerate(g.edges.tolist()):
            assert stars.hub_vertex(stars.star[e]) in (a, b)
        for s in range(stars.num_stars):
            edges = g.edges[stars.star == s]
            if len(edges) > 1:
                assert not stars.is_trivial(s)
                assert all(stars.hub[s] in e for e in edges.tolist())
            else:
                assert stars.is_trivial(s)


@pytest.mark.parametrize("order", ["natural", "random", "smallest_last", "incidence_degree"])
def test_acyclic_random_graphs(rng, order):
    for _ in range(25):
        g = build_adjacency_graph(random_symmetric(rng, 40, diagonal="random"))
        c, forest = acyclic_coloring(g, order_vertices(g, order, seed=2))
        col = c.color
        assert col.min() >= 1
        assert proper(g, col)
        assert acyclic_ok(g, col)
        roots = forest.roots()
        assert forest.nt == len(set(roots.tolist()))
        for r in set(roots.tolist()):
            pairs = {frozenset((col[a], col[b])) for a, b in g.edges[roots == r].tolist()}
            assert len(pairs) == 1


def test_acyclic_trees_are_two_colored_components(rng):
    # every tree is a connected component of the subgraph its color pair induces
    for _ in range(20):
        g = build_adjacency_graph(random_symmetric(rng, 30))
        c, forest = acyclic_coloring(g, natural(g.n_vertices))
        col, roots = c.color, forest.roots()
        h = nx_graph(g)
        for r in set(roots.tolist()):
            edges = g.edges[roots == r].tolist()
            pair = {col[edges[0][0]], col[edges[0][1]]}
            sub = h.subgraph([v for v in h if col[v] in pair])
            comp = nx.node_connected_component(sub, edges[0][0])
            assert {v for e in edges for v in e} == comp


def test_order_must_be_permutation():
    g = build_adjacency_graph(path_graph(3))
    with pytest.raises(ValueError):
        star_coloring(g, [0, 0, 1])
    with pytest.raises(ValueError):
        acyclic_coloring(g, [0, 1])


def test_coloring_is_read_only():
    c = Coloring.from_list([1, 2, 1])
    assert c.num_colors == 2
    with pytest.raises(ValueError):
        c.color[0] = 5
