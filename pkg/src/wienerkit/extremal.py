"""Extremal searches and the structural checks built around them.

Covers longest-path layer decompositions of trees, the diametral-path cover
condition with its Wiener-increasing repair step, edge-minimality and
tree-reducibility, exhaustive maximum searches with tie-complete witness
lists, the conjecture verifier ``W(G) <= W(C_{2d+1})`` for diameter ``d`` on
``2d+1`` vertices, and the two-block upper bound used for 11 vertices.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .blocks import cut_vertex_mask
from .canon import canonical_code
from .enumeration import (
    MAX_GRAPH_ORDER,
    FamilyFilter,
    enumerate_by_blocks,
    enumerate_connected_graphs,
    enumerate_trees,
    graph6_stream,
)
from .errors import (
    AlreadyCovered,
    BadParameters,
    EmptyFamily,
    NotALongestPath,
    NotATree,
    NotInFamily,
    SourceUnavailable,
    TooLargeForGeneration,
    Unsupported,
)
from .families import (
    lollipop_pendant_distance,
    star_tree,
    wagner_partition,
    wiener_cycle,
)
from .graph import Graph, component_mask, iter_bits, merge_at_vertex
from .graph6 import encode
from .metrics import center_median, diameter, distances, wiener_and_diameter, wiener_index

# maximum Wiener index over graphs with exactly two cut vertices, n = 6..10
TWO_CUT_MAX = {6: 29, 7: 44, 8: 64, 9: 88, 10: 121}


# -- longest paths and layers ----------------------------------------------------------


def _bfs_parents(t: Graph, root: int) -> tuple[list[int], list[int]]:
    dist = [-1] * t.n
    parent = [-1] * t.n
    dist[root] = 0
    queue = [root]
    for v in queue:
        for u in iter_bits(t.adj[v]):
            if dist[u] < 0:
                dist[u] = dist[v] + 1
                parent[u] = v
                queue.append(u)
    return dist, parent


def longest_path(t: Graph) -> list[int]:
    """A diametral path of a tree by double sweep; ties go to the smallest index."""
    if not t.is_tree():
        raise NotATree("longest_path expects a tree")
    dist, _ = _bfs_parents(t, 0)
    u = dist.index(max(dist))
    dist, parent = _bfs_parents(t, u)
    w = dist.index(max(dist))
    path = [w]
    while path[-1] != u:
        path.append(parent[path[-1]])
    return path[::-1]


@dataclass(frozen=True)
class LayeredDecomposition:
    """Vertices grouped by (attachment index on the base path, depth below it).

    ``layers[(i, j)]`` holds the vertices at distance ``j`` from ``v_i`` once
    the base path edges are removed.  The path ends appear as ``(0, 0)`` and
    ``(d, 0)`` so that the layers partition the vertex set.
    """

    base: tuple[int, ...]
    layers: dict[tuple[int, int], tuple[int, ...]]
    position: dict[int, tuple[int, int]] = field(repr=False)

    @property
    def d(self) -> int:
        return len(self.base) - 1

    def layer(self, i: int, j: int) -> tuple[int, ...]:
        return self.layers.get((i, j), ())


def layered_decomposition(t: Graph, base: list[int] | None = None) -> LayeredDecomposition:
    if not t.is_tree():
        raise NotATree("layered decomposition is defined for trees")
    d = diameter(t)
    if base is None:
        base = longest_path(t)
    base = list(base)
    ok = (len(base) == d + 1 and len(set(base)) == len(base)
          and all(0 <= v < t.n for v in base)
          and all(t.has_edge(base[i], base[i + 1]) for i in range(d)))
    if not ok:
        raise NotALongestPath(f"{base} is not a path of length {d}")
    on_path = 0
    for v in base:
        on_path |= 1 << v
    layers: dict[tuple[int, int], list[int]] = {}
    position: dict[int, tuple[int, int]] = {}
    for i, root in enumerate(base):
        layers[(i, 0)] = [root]
        position[root] = (i, 0)
        frontier, seen, j = [root], 1 << root, 0
        while frontier:
            j += 1
            nxt = []
            for v in frontier:
                for u in iter_bits(t.adj[v] & ~on_path & ~seen):
                    seen |= 1 << u
                    nxt.append(u)
            if nxt:
                layers[(i, j)] = sorted(nxt)
                for u in nxt:
                    position[u] = (i, j)
            frontier = nxt
    return LayeredDecomposition(tuple(base), {k: tuple(v) for k, v in layers.items()}, position)


@dataclass(frozen=True)
class CoverReport:
    covered: bool
    uncovered: tuple[int, ...]


def diametral_path_cover_check(t: Graph) -> CoverReport:
    """Which vertices lie on no path of length ``diam(t)``."""
    if not t.is_connected() or not t.is_tree():
        raise Unsupported("the diametral path cover is checked for trees only")
    if t.n == 1:
        return CoverReport(True, ())
    dm = distances(t)
    D, d = dm.d, dm.diameter
    ends = D == d
    # v is on the u-w path iff d(u,v) + d(v,w) = d(u,w)
    on = (D[:, :, None] + D[None, :, :]) == d
    hit = (on & ends[:, None, :]).any(axis=(0, 2))
    uncovered = tuple(int(v) for v in np.flatnonzero(~hit))
    return CoverReport(not uncovered, uncovered)


# -- improvement step --------------------------------------------------------------------


@dataclass(frozen=True)
class ImprovementStep:
    tree: Graph
    case: str
    mirrored: bool
    vertex: int          # the uncovered vertex that was moved
    articulation: int    # where its branch was cut off
    target: int          # vertex of the remaining tree it was re-attached to
    proof_target: bool   # the first-choice target already worked
    wiener_before: int
    wiener_after: int


def _component_with(adj, start: int, banned: int, n: int) -> int:
    allowed = ((1 << n) - 1) & ~(1 << banned)
    return component_mask(adj, start, allowed)


def improvement_step(t: Graph, vertex: int | None = None) -> ImprovementStep:
    """Move a branch that holds an uncovered vertex so that W strictly grows.

    The branch at the nearest degree-3 ancestor ``v'`` of the uncovered vertex
    is cut off and re-attached to ``v_l``, ``v_{d-l}`` or a child ``v''`` of
    ``v'``, where ``l`` is the height of the branch; the median of what is left
    decides which.  The near end of the base path is always taken to be the
    ``v_0`` end, so the mirrored situation reverses the path first.
    ``vertex`` picks the uncovered vertex to act on (default: the smallest).
    """
    cover = diametral_path_cover_check(t)
    if cover.covered:
        raise AlreadyCovered("every vertex lies on a longest path")
    w0 = wiener_index(t)
    d = diameter(t)
    path = longest_path(t)
    if vertex is None:
        vertex = cover.uncovered[0]
    elif vertex not in cover.uncovered:
        raise AlreadyCovered(f"vertex {vertex} already lies on a longest path")
    v = vertex
    lay = layered_decomposition(t, path)
    g, h = lay.position[v]
    mirrored = g > d - g
    if mirrored:
        path = path[::-1]
        lay = layered_decomposition(t, path)
        g, h = lay.position[v]

    _, parent = _bfs_parents(t, path[g])
    vp = parent[v]
    while t.degree(vp) < 3:
        vp = parent[vp]
    toward_v = v
    while parent[toward_v] != vp:
        toward_v = parent[toward_v]

    part1 = _component_with(t.adj, toward_v, vp, t.n) | (1 << vp)
    part2 = ((1 << t.n) - 1) & ~part1 | (1 << vp)
    t01, keep1 = t.induced(list(iter_bits(part1)))
    t02, keep2 = t.induced(list(iter_bits(part2)))
    idx1 = {x: i for i, x in enumerate(keep1)}
    idx2 = {x: i for i, x in enumerate(keep2)}
    ell = max(distances(t01).d[idx1[vp]])
    median = {keep2[i] for i in center_median(t02).median}

    hp = lay.position[vp][1]
    deeper = [x for x in iter_bits(t.adj[vp] & part2)
              if lay.position[x] == (g, hp + 1)]
    branch = {x: _component_with(t.adj, x, vp, t.n) & part2 for x in iter_bits(t.adj[vp] & part2)}

    def in_branch(x: int) -> bool:
        return any(branch[x] >> m & 1 for m in median)

    if median and all(any(branch[x] >> m & 1 for x in deeper) for m in median):
        case, first = "I", path[ell]
    elif vp == path[g]:
        # the branch of v' that contains v_l goes through v_{g-1}
        case = "II-path"
        first = path[d - ell] if in_branch(path[g - 1]) else path[ell]
    else:
        case = "II-offpath"
        outside = [x for x in deeper if not in_branch(x)]
        first = (outside or deeper)[0]

    targets = [first, path[ell], path[d - ell]] + deeper
    seen = set()
    for x in targets:
        if x in seen:
            continue
        seen.add(x)
        cand = merge_at_vertex(t02, idx2[x], t01, idx1[vp])
        wd = wiener_and_diameter(cand.adj, cand.n)
        if wd[1] == d and wd[0] > w0:
            return ImprovementStep(cand, case, mirrored, v, vp, x, x == first, w0, wd[0])
    raise AssertionError("no re-attachment target increased the Wiener index")


def improve_tree(t: Graph) -> Graph:
    """Tree of the same order and diameter with a strictly larger Wiener index."""
    return improvement_step(t).tree


def improve_until_covered(t: Graph) -> list[ImprovementStep]:
    """Apply improvement steps until every vertex lies on a longest path."""
    steps = []
    while not diametral_path_cover_check(t).covered:
        step = improvement_step(t)
        steps.append(step)
        t = step.tree
    return steps


# -- edge minimality and reducibility --------------------------------------------------


def in_family(g: Graph, flt: FamilyFilter) -> bool:
    return flt.matches(g)


def is_edge_minimal(g: Graph, flt: FamilyFilter) -> bool:
    """No single edge can be removed while staying in the family."""
    if not flt.matches(g):
        raise NotInFamily(f"graph is not in {flt.describe()}")
    for u, v in g.edges():
        if flt.matches(g.delete_edge(u, v)):
            return False
    return True


def spanning_trees(g: Graph) -> Iterable[Graph]:
    """All spanning trees, by include/exclude backtracking over the edge list.

    An edge is only excluded while the remaining graph stays connected, and
    only included while it joins two different components of the forest, so
    every leaf of the search is a spanning tree.
    """
    if not g.is_connected():
        return
    n = g.n
    edges = g.edges()
    full = (1 << n) - 1

    def rec(i: int, adj: list[int], comp: list[int], chosen: list[tuple[int, int]]):
        if len(chosen) == n - 1:
            yield Graph.from_edges(n, chosen)
            return
        if i == len(edges):
            return
        u, v = edges[i]
        if comp[u] != comp[v]:
            old, new = comp[v], comp[u]
            merged = [new if c == old else c for c in comp]
            chosen.append((u, v))
            yield from rec(i + 1, adj, merged, chosen)
            chosen.pop()
        adj2 = list(adj)
        adj2[u] &= ~(1 << v)
        adj2[v] &= ~(1 << u)
        if component_mask(adj2, 0, full) == full:
            yield from rec(i + 1, adj2, comp, chosen)

    yield from rec(0, list(g.adj), list(range(n)), [])


def is_reducible_to_tree(g: Graph, d: int) -> tuple[bool, Graph | None]:
    """Whether some spanning tree has diameter exactly ``d``, with a witness."""
    for tree in spanning_trees(g):
        if diameter(tree) == d:
            return True, tree
    return False, None


def family_members(n: int, k: int, d: int | None = None, minimal_blocks: bool = False) -> list[Graph]:
    """Graphs with ``n`` vertices, ``k`` cut vertices and optional diameter ``d``."""
    out = enumerate_by_blocks(n, k, minimal_blocks=minimal_blocks)
    if d is not None:
        out = [g for g in out if diameter(g) == d]
    return out


def edge_minimal_classes(n: int, k: int, d: int, exclude_tree_reducible: bool = False) -> list[Graph]:
    """Edge-minimal members of the class, one per isomorphism class."""
    flt = FamilyFilter(n, diameter=d, cut_vertices=k)
    out = []
    for g in family_members(n, k, d):
        if not is_edge_minimal(g, flt):
            continue
        if exclude_tree_reducible and is_reducible_to_tree(g, d)[0]:
            continue
        out.append(g)
    return out


# -- searches and reports -----------------------------------------------------------------


@dataclass
class SearchReport:
    family: str
    params: dict
    examined: int = 0
    max_wiener: int | None = None
    witnesses: list[tuple[str, str, int]] = field(default_factory=list)  # (graph6, code hex, W)
    counterexamples: list[tuple[str, str, int]] = field(default_factory=list)
    elapsed_ms: int = 0

    def payload(self) -> dict:
        return {
            "family": self.family,
            "params": self.params,
            "examined": self.examined,
            "max_wiener": self.max_wiener,
            "witnesses": [{"graph6": a, "code": b, "wiener": c} for a, b, c in self.witnesses],
            "counterexamples": [{"graph6": a, "code": b, "wiener": c} for a, b, c in self.counterexamples],
        }

    def checksum(self) -> str:
        blob = json.dumps(self.payload(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()

    def to_json(self) -> str:
        out = self.payload()
        out["elapsed_ms"] = self.elapsed_ms
        out["checksum"] = self.checksum()
        return json.dumps(out, sort_keys=True, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SearchReport":
        raw = json.loads(text)

        def rows(key):
            return [(w["graph6"], w["code"], w["wiener"]) for w in raw.get(key, [])]

        return cls(raw["family"], raw["params"], raw["examined"], raw["max_wiener"],
                   rows("witnesses"), rows("counterexamples"), raw.get("elapsed_ms", 0))


def _witness(g: Graph, w: int) -> tuple[str, str, int]:
    return encode(g), canonical_code(g).hex, w


def max_wiener_search(stream: Iterable[Graph], flt: FamilyFilter | None = None,
                      family: str = "custom", params: dict | None = None,
                      bound: int | None = None) -> SearchReport:
    """Exact maximum over a stream, with one witness per isomorphism class.

    When ``bound`` is given, every graph above it is listed as a counterexample.
    """
    start = time.perf_counter()
    if params is None:
        params = flt.describe() if flt is not None else {}
    report = SearchReport(family, params)
    best = -1
    wit: dict[str, tuple[str, str, int]] = {}
    bad: dict[str, tuple[str, str, int]] = {}
    for g in stream:
        if flt is not None and not flt.matches(g):
            continue
        wd = wiener_and_diameter(g.adj, g.n)
        if wd is None:
            continue
        w = wd[0]
        report.examined += 1
        if w > best:
            best = w
            wit = {}
        if w == best:
            row = _witness(g, w)
            wit.setdefault(row[1], row)
        if bound is not None and w > bound:
            row = _witness(g, w)
            bad.setdefault(row[1], row)
    if report.examined == 0:
        raise EmptyFamily(f"no graphs in {family} {params}")
    report.max_wiener = best
    report.witnesses = [wit[c] for c in sorted(wit)]
    report.counterexamples = [bad[c] for c in sorted(bad)]
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def merge_reports(reports: Iterable[SearchReport]) -> SearchReport:
    """Combine shard reports: global maximum, union of witnesses and counterexamples."""
    reports = list(reports)
    if not reports:
        raise BadParameters("nothing to merge")
    def unsharded(r: SearchReport) -> dict:
        return {k: v for k, v in r.params.items() if k != "shard"}

    first = reports[0]
    for r in reports[1:]:
        if (r.family, unsharded(r)) != (first.family, unsharded(first)):
            raise BadParameters("reports describe different searches")
    out = SearchReport(first.family, unsharded(first))
    out.examined = sum(r.examined for r in reports)
    nonempty = [r for r in reports if r.max_wiener is not None and r.examined]
    if not nonempty:
        raise EmptyFamily("all shards were empty")
    out.max_wiener = max(r.max_wiener for r in nonempty)
    wit, bad = {}, {}
    for r in nonempty:
        if r.max_wiener == out.max_wiener:
            for row in r.witnesses:
                wit.setdefault(row[1], row)
        for row in r.counterexamples:
            bad.setdefault(row[1], row)
    out.witnesses = [wit[c] for c in sorted(wit)]
    out.counterexamples = [bad[c] for c in sorted(bad)]
    out.elapsed_ms = sum(r.elapsed_ms for r in reports)
    return out


def family_stream(flt: FamilyFilter, trees: bool = False, source: str | None = None,
                  shard: tuple[int, int] = (0, 1)):
    """Generated trees or connected graphs, or a graph6 catalog, filtered by ``flt``."""
    if source is not None and source != "generated":
        if not os.path.exists(source) and source != "-":
            raise SourceUnavailable(f"catalog {source} not found")
        keep = flt if not trees else FamilyFilter(flt.n, flt.diameter, flt.cut_vertices,
                                                 _and(flt.predicate, Graph.is_tree))
        return graph6_stream(source, keep)
    if trees:
        return enumerate_trees(flt, shard=shard)
    return enumerate_connected_graphs(flt, shard=shard)


def _and(p, q):
    if p is None:
        return q
    return lambda g: p(g) and q(g)


def search(flt: FamilyFilter, trees: bool = False, source: str | None = None,
           shard: tuple[int, int] = (0, 1), family: str | None = None) -> SearchReport:
    params = dict(flt.describe(), trees=trees)
    if shard != (0, 1):
        params["shard"] = f"{shard[0]}/{shard[1]}"
    name = family or ("trees" if trees else "connected")
    return max_wiener_search(family_stream(flt, trees, source, shard), None, name, params)


def verify_djw(d: int, source: str | None = None, trees_only: bool = False,
               shard: tuple[int, int] = (0, 1)) -> SearchReport:
    """Check ``W(G) <= W(C_{2d+1})`` over every graph of diameter ``d`` on ``2d+1`` vertices."""
    if d < 2:
        raise BadParameters("d must be at least 2")
    n = 2 * d + 1
    if (source is None or source == "generated") and not trees_only and n > MAX_GRAPH_ORDER:
        raise SourceUnavailable(f"generation stops at n = {MAX_GRAPH_ORDER}; pass a graph6 catalog for d = {d}")
    bound = wiener_cycle(n)
    flt = FamilyFilter(n, diameter=d)
    params = {"d": d, "n": n, "bound": bound, "trees": trees_only}
    if shard != (0, 1):
        params["shard"] = f"{shard[0]}/{shard[1]}"
    try:
        stream = family_stream(flt, trees_only, source, shard)
    except TooLargeForGeneration as exc:
        raise SourceUnavailable(str(exc)) from None
    return max_wiener_search(stream, None, "djw", params, bound=bound)


def max_wiener_two_cut(n: int) -> int:
    """Maximum Wiener index over graphs with exactly two cut vertices.

    Uses minimally 2-connected blocks only: a maximiser cannot have a block
    that stays 2-connected after losing an edge, since removing that edge keeps
    the cut vertices and raises W.
    """
    return max(wiener_index(g) for g in enumerate_by_blocks(n, 2, minimal_blocks=True))


def bound_eq4(n1: int, n2: int, table: dict[int, int] | None = None) -> int:
    """Upper bound on W when a block of order ``n1`` meets a two-cut part of order ``n2``.

    ``(n1-1)^2 + maxW_2(n2) + (n2-1)(n1-1) + (n1-1) D(z)`` where ``z`` is the
    pendant vertex of the lollipop ``L_{n2, n2-2}``.
    """
    if n1 < 2 or n2 < 6:
        raise BadParameters("needs n1 >= 2 and n2 >= 6")
    table = TWO_CUT_MAX if table is None else table
    top = table[n2] if n2 in table else max_wiener_two_cut(n2)
    a = n1 - 1
    return a * a + top + (n2 - 1) * a + a * lollipop_pendant_distance(n2, n2 - 2)


def eq4_rows(n: int = 11) -> list[tuple[int, int, int]]:
    """``(n1, n2, bound)`` for every split with ``n1 + n2 - 1 = n`` and ``n2 >= 6``."""
    return [(n1, n + 1 - n1, bound_eq4(n1, n + 1 - n1)) for n1 in range(2, n - 4)]


# -- evidence tables ---------------------------------------------------------------------------


def center_median_evidence(trees: Iterable[Graph]) -> list[dict]:
    """For every (n, d) present in the stream, d(C, M) of each Wiener maximiser."""
    groups: dict[tuple[int, int], tuple[int, dict]] = {}
    for t in trees:
        wd = wiener_and_diameter(t.adj, t.n)
        key = (t.n, wd[1])
        best, wit = groups.get(key, (-1, {}))
        if wd[0] > best:
            best, wit = wd[0], {}
        if wd[0] == best:
            wit.setdefault(canonical_code(t).hex, t)
        groups[key] = (best, wit)
    rows = []
    for (n, d) in sorted(groups):
        best, wit = groups[(n, d)]
        dists = [center_median(wit[c]).center_median_distance for c in sorted(wit)]
        rows.append({"n": n, "d": d, "max_wiener": best, "witnesses": len(wit),
                     "center_median_distances": dists, "all_zero": all(x == 0 for x in dists)})
    return rows


def wagner_check(n: int) -> dict:
    """Compare the star-tree from the degree partition with brute force at diameters 2..4.

    Reports the per-diameter maxima and the maximum over the union, and
    whether the star-tree attains each.
    """
    st = star_tree(wagner_partition(n))
    w_star, d_star = wiener_index(st), diameter(st)
    per_d = {}
    for d in (2, 3, 4):
        if d > n - 1:
            continue
        try:
            per_d[d] = search(FamilyFilter(n, diameter=d), trees=True).max_wiener
        except EmptyFamily:
            continue
    union = max(per_d.values())
    return {
        "n": n,
        "partition": list(wagner_partition(n)),
        "star_tree_wiener": w_star,
        "star_tree_diameter": d_star,
        "per_diameter_max": per_d,
        "union_max": union,
        "attains_union_max": w_star == union,
        "attains_own_diameter_max": w_star == per_d.get(d_star),
    }


def cut_vertex_counts(n: int, d: int, source: str | None = None) -> dict[int, int]:
    """How many connected graphs of diameter ``d`` have each number of cut vertices."""
    out: dict[int, int] = {}
    for g in family_stream(FamilyFilter(n, diameter=d), source=source):
        k = cut_vertex_mask(g.adj, g.n).bit_count()
        out[k] = out.get(k, 0) + 1
    return dict(sorted(out.items()))
