"""Independent reference implementations used only by the tests.

Nothing here shares code with the package: distances come from
Floyd-Warshall in numpy, isomorphism from trying every permutation, and
graph catalogs from networkx.
"""

from __future__ import annotations

import itertools

import networkx as nx
import numpy as np

INF = 10 ** 6


def floyd(n: int, edges) -> np.ndarray:
    d = np.full((n, n), INF, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in edges:
        d[u, v] = d[v, u] = 1
    for k in range(n):
        d = np.minimum(d, d[:, k:k + 1] + d[k:k + 1, :])
    return d


def wiener(n: int, edges) -> int:
    d = floyd(n, edges)
    assert d.max() < INF
    return int(d.sum() // 2)


def brute_isomorphic(n1: int, e1, n2: int, e2) -> bool:
    if n1 != n2 or len(e1) != len(e2):
        return False
    target = {frozenset(e) for e in e2}
    for perm in itertools.permutations(range(n1)):
        if all(frozenset((perm[u], perm[v])) in target for u, v in e1):
            return True
    return False


def atlas_connected(n: int) -> list[nx.Graph]:
    """Every connected graph on n <= 7 vertices, one per class."""
    return [g for g in nx.graph_atlas_g() if g.number_of_nodes() == n and nx.is_connected(g)]


def nx_from(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def cut_count(h: nx.Graph) -> int:
    return len(list(nx.articulation_points(h)))


def brute_isomorphic_by_degree(n1: int, e1, n2: int, e2) -> bool:
    """Permutation search restricted to degree-preserving maps; exact and independent."""
    if n1 != n2 or len(e1) != len(e2):
        return False
    deg1, deg2 = [0] * n1, [0] * n2
    for u, v in e1:
        deg1[u] += 1
        deg1[v] += 1
    for u, v in e2:
        deg2[u] += 1
        deg2[v] += 1
    if sorted(deg1) != sorted(deg2):
        return False
    classes = sorted(set(deg1))
    src = [[v for v in range(n1) if deg1[v] == d] for d in classes]
    dst = [[v for v in range(n2) if deg2[v] == d] for d in classes]
    target = {frozenset(e) for e in e2}
    for parts in itertools.product(*(itertools.permutations(c) for c in dst)):
        perm = [0] * n1
        for s, p in zip(src, parts):
            for a, b in zip(s, p):
                perm[a] = b
        if all(frozenset((perm[u], perm[v])) in target for u, v in e1):
            return True
    return False


def labeled_connected_classes(n: int) -> int:
    """Connected classes on n <= 5 vertices by labeled enumeration and brute dedup."""
    pairs = [(u, v) for v in range(n) for u in range(v)]
    perms = list(itertools.permutations(range(n)))
    seen = set()
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(edges)
        if not nx.is_connected(h):
            continue
        key = min(tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges)) for p in perms)
        seen.add(key)
    return len(seen)


def prufer_tree_classes(n: int) -> list[nx.Graph]:
    """One representative per class of all labeled trees on n vertices (Pruefer codes)."""
    reps: list[nx.Graph] = []
    for code in itertools.product(range(n), repeat=n - 2):
        t = nx.from_prufer_sequence(list(code))
        if not any(nx.is_isomorphic(t, r) for r in reps):
            reps.append(t)
    return reps
