from __future__ import annotations

import time

import pytest

from wienerkit.enumeration import FamilyFilter, enumerate_connected_graphs
from wienerkit.graph6 import read_graph6, write_graph6


@pytest.fixture(scope="session")
def connected9(tmp_path_factory):
    """All connected 9-vertex graphs, generated once and cached as graph6.

    Returns (path, generation seconds).
    """
    path = tmp_path_factory.mktemp("catalog") / "connected9.g6"
    start = time.perf_counter()
    count = write_graph6(enumerate_connected_graphs(FamilyFilter(9)), path)
    elapsed = time.perf_counter() - start
    assert count == 261080
    return path, elapsed


@pytest.fixture(scope="session")
def small_connected():
    """n -> list of connected graphs for n <= 8."""
    return {n: list(enumerate_connected_graphs(FamilyFilter(n))) for n in range(1, 9)}


@pytest.fixture(scope="session")
def all_connected_upto9(small_connected, connected9):
    def gen():
        for n in range(1, 9):
            yield from small_connected[n]
        yield from read_graph6(connected9[0])
    return gen


@pytest.fixture(scope="session")
def catalog_facts(all_connected_upto9):
    """One pass over every connected graph with n <= 9.

    Collects violations of the eccentric distance-sum bound (1 <= k <= n-3),
    graphs with k >= 2 lacking two vertex-disjoint s-pendant blocks, and the
    cut-vertex distribution at diameter (n-1)/2 for odd n.
    """
    from wienerkit.blocks import block_cut_tree, cut_vertex_mask
    from wienerkit.families import lollipop_pendant_distance
    from wienerkit.metrics import distance_sums, wiener_and_diameter

    facts = {"graphs": 0, "dmax_checked": 0, "dmax_bad": [], "spendant_checked": 0,
             "spendant_bad": [], "half_diameter_cuts": {7: {}, 9: {}}}
    for g in all_connected_upto9():
        facts["graphs"] += 1
        k = cut_vertex_mask(g.adj, g.n).bit_count()
        if 1 <= k <= g.n - 3:
            facts["dmax_checked"] += 1
            if max(distance_sums(g)) > lollipop_pendant_distance(g.n, g.n - k):
                facts["dmax_bad"].append(g)
        if k >= 2:
            facts["spendant_checked"] += 1
            if not block_cut_tree(g).has_disjoint_s_pendant_pair():
                facts["spendant_bad"].append(g)
        if g.n in (7, 9) and wiener_and_diameter(g.adj, g.n)[1] == (g.n - 1) // 2:
            row = facts["half_diameter_cuts"][g.n]
            row[k] = row.get(k, 0) + 1
    return facts
