from __future__ import annotations

import itertools
import random

import networkx as nx
import pytest

from oracles import atlas_connected, brute_isomorphic, brute_isomorphic_by_degree
from wienerkit.canon import (
    are_isomorphic,
    automorphism_orbits,
    canonical_code,
    canonical_graph,
    graph_canonical_form,
    tree_canonical_code,
)
from wienerkit.enumeration import FamilyFilter, enumerate_trees
from wienerkit.errors import NotATree, TooLarge
from wienerkit.families import build, cycle_graph, path_graph, spec
from wienerkit.graph import Graph


def shuffled(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def from_nx(h: nx.Graph) -> Graph:
    idx = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph.from_edges(len(idx), [(idx[u], idx[v]) for u, v in h.edges()])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def test_path_labelings_same_tree_code():
    a = path_graph(4)
    b = Graph.from_edges(4, [(2, 0), (0, 3), (3, 1)])
    assert tree_canonical_code(a) == tree_canonical_code(b)


def test_diameter_five_candidates_distinct():
    t7, t9 = build(spec("T7", n=9)), build(spec("T9", n=9))
    assert tree_canonical_code(t7) != tree_canonical_code(t9)
    assert not are_isomorphic(t7, t9)


def test_nine_vertex_tree_codes_distinct_and_exact():
    trees = list(enumerate_trees(FamilyFilter(9)))
    assert len(trees) == 47
    codes = [tree_canonical_code(t) for t in trees]
    assert len(set(codes)) == 47
    for a, b in itertools.combinations(trees, 2):
        assert not brute_isomorphic_by_degree(a.n, a.edges(), b.n, b.edges())


def test_cycle_relabelings_share_one_code():
    rng = random.Random(1)
    c5 = cycle_graph(5)
    codes = {graph_canonical_form(shuffled(c5, rng)) for _ in range(100)}
    assert len(codes) == 1


def test_hexagon_graphs_differ():
    g7, g8 = build(spec("G7")), build(spec("G8"))
    assert graph_canonical_form(g7) != graph_canonical_form(g8)


def test_random_seven_vertex_pairs_match_permutation_oracle():
    rng = random.Random(7)
    agree = 0
    for _ in range(150):
        g = random_graph(rng, 7, 0.4)
        if rng.random() < 0.5:
            h = shuffled(g, rng)
        else:
            # same edge count, usually not isomorphic
            edges = g.edges()
            if not edges:
                continue
            u, v = edges[rng.randrange(len(edges))]
            missing = [(a, b) for a in range(7) for b in range(a + 1, 7) if not g.has_edge(a, b)]
            if not missing:
                continue
            a, b = missing[rng.randrange(len(missing))]
            h = shuffled(g.delete_edge(u, v).add_edge(a, b), rng)
        expected = brute_isomorphic(7, g.edges(), 7, h.edges())
        assert are_isomorphic(g, h) == expected
        agree += 1
    assert agree > 100


def test_relabeling_invariance_many():
    rng = random.Random(2024)
    for _ in range(10_000):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.random())
        assert graph_canonical_form(g) == graph_canonical_form(shuffled(g, rng))


def test_connected_up_to_seven_exact_against_atlas():
    rng = random.Random(3)
    for n in range(1, 8):
        graphs = [from_nx(h) for h in atlas_connected(n)]
        codes = [graph_canonical_form(g) for g in graphs]
        assert len(set(codes)) == len(graphs)
        for g, c in zip(graphs, codes):
            assert graph_canonical_form(shuffled(g, rng)) == c


def test_tree_and_general_codes_agree():
    rng = random.Random(4)
    for n in range(1, 11):
        trees = [from_nx(t) for t in nx.nonisomorphic_trees(n)] if n > 1 else [Graph(1, [0])]
        tc = [tree_canonical_code(t) for t in trees]
        gc = [graph_canonical_form(t) for t in trees]
        assert len(set(tc)) == len(set(gc)) == len(trees)
        for t, a, b in zip(trees, tc, gc):
            s = shuffled(t, rng)
            assert tree_canonical_code(s) == a and graph_canonical_form(s) == b


def test_canonical_graph_is_a_fixed_point():
    rng = random.Random(9)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 10), 0.5)
        c = canonical_graph(g)
        assert are_isomorphic(c, g)
        assert canonical_graph(shuffled(g, rng)) == c


def test_orbits_against_brute_force():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 7)
        g = random_graph(rng, n, rng.random())
        edges = {frozenset(e) for e in g.edges()}
        owner = list(range(n))
        for perm in itertools.permutations(range(n)):
            if all(frozenset((perm[u], perm[v])) in edges for u, v in g.edges()):
                for v in range(n):
                    a, b = owner[v], owner[perm[v]]
                    m = min(a, b)
                    owner = [m if x in (a, b) else x for x in owner]
        expected = sorted(sorted(v for v in range(n) if owner[v] == r) for r in set(owner))
        assert automorphism_orbits(g) == expected


def test_large_and_wrong_inputs():
    with pytest.raises(TooLarge):
        graph_canonical_form(path_graph(13))
    with pytest.raises(TooLarge):
        are_isomorphic(path_graph(13), path_graph(13))
    with pytest.raises(NotATree):
        tree_canonical_code(cycle_graph(4))
    # beyond the general limit trees fall back to the tree code
    assert canonical_code(path_graph(13)).kind == "tree"
    assert canonical_code(path_graph(5)).kind == "general"


def test_hard_regular_graphs():
    # strongly regular and vertex-transitive inputs exercise the search tree
    for h in (nx.petersen_graph(), nx.complete_graph(12), nx.empty_graph(12), nx.circulant_graph(12, [1, 5])):
        g = from_nx(h)
        rng = random.Random(0)
        assert graph_canonical_form(g) == graph_canonical_form(shuffled(g, rng))
    assert len(automorphism_orbits(from_nx(nx.petersen_graph()))) == 1


def test_code_hex_is_lowercase():
    code = graph_canonical_form(cycle_graph(5))
    assert code.hex == code.hex.lower() and code.kind == "general"
