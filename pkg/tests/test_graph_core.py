from __future__ import annotations

import random

import networkx as nx
import numpy as np
import pytest

from oracles import cut_count, floyd, nx_from, wiener as oracle_wiener
from wienerkit.blocks import NON_PENDANT, PENDANT, S_PENDANT, block_cut_tree, cut_vertices
from wienerkit.errors import Disconnected, EdgeAbsent, IndexOutOfRange, WienerKitError
from wienerkit.families import build, cycle_graph, lollipop, path_graph, spec, star_graph
from wienerkit.graph import Graph, disjoint_union, merge_at_vertex
from wienerkit.metrics import (
    center_median,
    compose_wiener,
    diameter,
    distance_sums,
    distances,
    eccentricities,
    wiener_and_diameter,
    wiener_index,
)


def random_connected(rng: random.Random, n: int, extra: float) -> Graph:
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < extra:
                edges.add((u, v))
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


# -- Graph type -----------------------------------------------------------------


def test_graph_rejects_asymmetric_and_loops():
    with pytest.raises(WienerKitError, match="asymmetric"):
        Graph(2, [0b10, 0])
    with pytest.raises(WienerKitError, match="self-loop"):
        Graph(1, [0b1])


def test_graph_order_limits():
    with pytest.raises(IndexOutOfRange):
        Graph(0, [])
    with pytest.raises(IndexOutOfRange):
        Graph(65, [0] * 65)
    assert Graph(64, [0] * 64).n == 64


def test_edges_and_degrees():
    g = Graph.from_edges(4, [(2, 1), (0, 1), (1, 3)])
    assert g.edges() == [(0, 1), (1, 2), (1, 3)]
    assert g.degrees() == [1, 3, 1, 1]
    assert g.m == 3 and g.is_tree()


def test_from_edges_bad_index():
    with pytest.raises(IndexOutOfRange):
        Graph.from_edges(3, [(0, 3)])


def test_delete_edge_absent():
    with pytest.raises(EdgeAbsent):
        path_graph(4).delete_edge(0, 2)


def test_cycle_minus_edge_is_path():
    c4 = cycle_graph(4)
    p = c4.delete_edge(0, 3)
    assert wiener_index(c4) == 8
    assert wiener_index(p) == 10


def test_merge_two_edges_is_p3():
    k2 = path_graph(2)
    m = merge_at_vertex(k2, 1, k2, 0)
    assert m.n == 3 and wiener_index(m) == 4 and diameter(m) == 2


def test_merge_index_check():
    with pytest.raises(IndexOutOfRange):
        merge_at_vertex(path_graph(2), 5, path_graph(2), 0)


def test_relabel_and_induced():
    g = path_graph(4).relabel([3, 2, 1, 0])
    assert g == path_graph(4)
    h, keep = cycle_graph(5).induced([0, 1, 2])
    assert keep == [0, 1, 2] and h.edges() == [(0, 1), (1, 2)]


def test_disjoint_union_is_disconnected():
    g = disjoint_union(path_graph(2), path_graph(3))
    assert g.n == 5 and not g.is_connected()
    with pytest.raises(Disconnected):
        distances(g)
    assert wiener_and_diameter(g.adj, g.n) is None


# -- distances -------------------------------------------------------------------------


def test_small_values():
    assert wiener_index(path_graph(4)) == 10
    assert wiener_index(cycle_graph(7)) == 42
    assert wiener_index(build(spec("T5"))) == 65
    assert wiener_index(build(spec("T6"))) == 62


def test_single_vertex():
    dm = distances(Graph(1, [0]))
    assert dm.wiener == 0 and dm.diameter == 0 and dm.vertex_sums == (0,)


def test_distance_matrix_against_floyd():
    rng = random.Random(11)
    for _ in range(200):
        n = rng.randint(1, 12)
        g = random_connected(rng, n, rng.random() * 0.5)
        dm = distances(g)
        ref = floyd(n, g.edges())
        assert np.array_equal(dm.d, ref)
        assert dm.wiener == int(ref.sum() // 2)
        assert 2 * dm.wiener == sum(dm.vertex_sums)
        assert dm.diameter == int(ref.max())
        assert wiener_and_diameter(g.adj, g.n) == (dm.wiener, dm.diameter)


def test_matrix_invariants():
    rng = random.Random(5)
    for _ in range(50):
        g = random_connected(rng, rng.randint(2, 10), 0.3)
        d = distances(g).d
        assert (np.diag(d) == 0).all()
        assert (d == d.T).all()
        for k in range(g.n):
            assert (d <= d[:, [k]] + d[[k], :]).all()


def test_eccentricity_and_center_median():
    prof = center_median(path_graph(5))
    assert prof.center == (2,) and prof.median == (2,) and prof.center_median_distance == 0
    prof = center_median(star_graph(5))
    assert prof.center == (0,) and prof.median == (0,)
    assert eccentricities(path_graph(4)) == [3, 2, 2, 3]
    prof = center_median(path_graph(4))
    assert prof.center == (1, 2) and prof.median == (1, 2)


def test_compose_wiener_examples():
    assert compose_wiener(1, 1, 2, 2, 1, 1) == 4
    # seven-cycle with a three-vertex path hanging from it
    c7, p3 = cycle_graph(7), path_graph(3)
    w = compose_wiener(42, 4, 7, 3, distance_sums(c7)[0], distance_sums(p3)[0])
    assert w == 88 == wiener_index(lollipop(9, 7))


def test_compose_star_with_path_end():
    k14, p3 = star_graph(5), path_graph(3)
    merged = merge_at_vertex(k14, 0, p3, 0)
    w = compose_wiener(wiener_index(k14), wiener_index(p3), 5, 3, distance_sums(k14)[0], distance_sums(p3)[0])
    assert w == wiener_index(merged) == oracle_wiener(merged.n, merged.edges())


# -- blocks -----------------------------------------------------------------------------


def test_cycle_has_one_block():
    bct = block_cut_tree(cycle_graph(7))
    assert bct.k == 0 and len(bct.blocks) == 1


def test_lollipop_blocks():
    bct = block_cut_tree(lollipop(9, 7))
    assert bct.k == 2
    sizes = sorted(len(b) for b in bct.blocks)
    assert sizes == [2, 2, 7]


def test_triangle_with_leaves_blocks():
    g = build(spec("G3"))
    bct = block_cut_tree(g)
    assert bct.cut_vertices == (0, 1, 2)
    assert sorted(len(b) for b in bct.blocks) == [2, 2, 2, 2, 3]
    tri = bct.blocks.index((0, 1, 2))
    assert bct.pendant_flags[tri] == NON_PENDANT
    assert all(bct.pendant_flags[i] == S_PENDANT for i in range(len(bct.blocks)) if i != tri)


def test_pendant_vs_s_pendant():
    # path 0-1-2-3: middle edge non-pendant, the ends pendant on a cut vertex in one non-pendant block
    bct = block_cut_tree(path_graph(4))
    assert bct.pendant_flags == (S_PENDANT, NON_PENDANT, S_PENDANT)
    # star: every block pendant but the hub lies in no non-pendant block
    bct = block_cut_tree(star_graph(4))
    assert set(bct.pendant_flags) == {PENDANT}


def test_single_vertex_and_edge():
    assert block_cut_tree(Graph(1, [0])).blocks == ((0,),)
    bct = block_cut_tree(path_graph(2))
    assert bct.k == 0 and bct.blocks == ((0, 1),)


def test_blocks_against_networkx():
    rng = random.Random(3)
    for _ in range(300):
        g = random_connected(rng, rng.randint(2, 12), rng.random() * 0.3)
        h = nx_from(g)
        bct = block_cut_tree(g)
        assert sorted(bct.cut_vertices) == sorted(nx.articulation_points(h))
        assert sorted(bct.blocks) == sorted(tuple(sorted(c)) for c in nx.biconnected_components(h))
        # every edge in exactly one block
        for u, v in g.edges():
            assert sum(1 for b in bct.blocks if u in b and v in b) == 1
        assert cut_count(h) == len(cut_vertices(g))


def test_blocks_disconnected():
    with pytest.raises(Disconnected):
        block_cut_tree(disjoint_union(path_graph(2), path_graph(2)))
    with pytest.raises(Disconnected):
        center_median(disjoint_union(path_graph(2), path_graph(2)))
