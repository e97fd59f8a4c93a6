"""Isomorph-free generation of trees and connected graphs.

Trees come from the Wright-Richmond-Odlyzko-McKay successor rule on
centre-rooted level sequences.  Connected graphs are grown one vertex at a
time by canonical augmentation: a child is kept only when the new vertex is,
up to automorphism, the vertex the deletion rule would remove, and parents
are always connected because that vertex is never a cut vertex.  Graphs with
a prescribed number of cut vertices can also be assembled block by block.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .blocks import cut_vertex_mask
from .canon import MAX_CANON_ORDER, canonical_labeling, graph_canonical_form
from .errors import BadFilter, TooLargeForGeneration
from .graph import Graph, component_mask, iter_bits, merge_at_vertex
from .graph6 import read_graph6
from .metrics import wiener_and_diameter

MAX_TREE_ORDER = 18
MAX_GRAPH_ORDER = 9
# level of the augmentation tree whose nodes are dealt out to shards
SHARD_LEVEL = 6


@dataclass(frozen=True)
class FamilyFilter:
    n: int
    diameter: int | None = None
    cut_vertices: int | None = None
    predicate: Callable[[Graph], bool] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise BadFilter("n must be at least 1")
        if self.diameter is not None and not 1 <= self.diameter <= self.n - 1:
            raise BadFilter(f"diameter {self.diameter} outside 1..{self.n - 1}")
        if self.cut_vertices is not None and not 0 <= self.cut_vertices <= max(self.n - 2, 0):
            raise BadFilter(f"cut vertex count {self.cut_vertices} outside 0..{self.n - 2}")

    def matches(self, g: Graph) -> bool:
        """Full check including connectivity; used for post-hoc verification."""
        if g.n != self.n:
            return False
        wd = wiener_and_diameter(g.adj, g.n)
        if wd is None:
            return False
        return self._tail(g, wd[1])

    def _tail(self, g: Graph, diam: int) -> bool:
        if self.diameter is not None and diam != self.diameter:
            return False
        if self.cut_vertices is not None and cut_vertex_mask(g.adj, g.n).bit_count() != self.cut_vertices:
            return False
        return self.predicate is None or self.predicate(g)

    def describe(self) -> dict:
        return {"n": self.n, "diameter": self.diameter, "cut_vertices": self.cut_vertices}


class EnumerationStream:
    """Iterator over graphs that tracks how many were emitted and where to resume.

    ``checkpoint()`` returns an opaque token; passing it back as ``resume``
    to the same producer continues right after the last emitted graph.
    """

    def __init__(self, source: str, producer: Callable[[list | None], Iterator[tuple[list, Graph]]],
                 resume: str | None = None):
        self.source = source
        self.emitted = 0
        self._position: list | None = json.loads(resume) if resume else None
        self._it = producer(self._position)

    def __iter__(self) -> "EnumerationStream":
        return self

    def __next__(self) -> Graph:
        position, g = next(self._it)
        self._position = position
        self.emitted += 1
        return g

    def checkpoint(self) -> str | None:
        return None if self._position is None else json.dumps(self._position)


# -- trees --------------------------------------------------------------------


def _split(layout: list[int]) -> tuple[list[int], list[int]]:
    """Left subtree of the root and the rest of the tree, as level sequences."""
    m = len(layout)
    for i in range(2, len(layout)):
        if layout[i] == 1:
            m = i
            break
    return [x - 1 for x in layout[1:m]], [0] + layout[m:]


def _next_rooted(layout: list[int], p: int | None = None) -> list[int] | None:
    if p is None:
        p = len(layout) - 1
        while layout[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while layout[q] != layout[p] - 1:
        q -= 1
    out = list(layout)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _next_free(layout: list[int]) -> list[int] | None:
    left, rest = _split(layout)
    lh, rh = max(left), max(rest)
    valid = rh >= lh
    if valid and rh == lh:
        if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
            valid = False
    if valid:
        return layout
    p = len(left)
    nxt = _next_rooted(layout, p)
    if nxt is None:
        return None
    if layout[p] > 2:
        new_left, _ = _split(nxt)
        h = max(new_left)
        tail = list(range(1, h + 2))
        nxt[-len(tail):] = tail
    return nxt


def _layouts(n: int) -> Iterator[list[int]]:
    """Centre-rooted level sequences, one per free tree on ``n`` >= 3 vertices."""
    layout: list[int] | None = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while layout is not None:
        layout = _next_free(layout)
        if layout is None:
            return
        yield layout
        layout = _next_rooted(layout)


def layout_diameter(layout: list[int]) -> int:
    """Diameter of the tree from its level sequence (root has >= 2 children)."""
    heights = []
    for x in layout[1:]:
        if x == 1:
            heights.append(1)
        elif x > heights[-1]:
            heights[-1] = x
    heights.sort(reverse=True)
    return heights[0] + (heights[1] if len(heights) > 1 else 0)


def layout_to_graph(layout: list[int]) -> Graph:
    n = len(layout)
    adj = [0] * n
    stack: list[int] = []
    for v, depth in enumerate(layout):
        del stack[depth:]
        if stack:
            u = stack[-1]
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        stack.append(v)
    return Graph(n, adj, check=False)


def _small_trees(n: int) -> list[Graph]:
    if n == 1:
        return [Graph(1, [0])]
    return [Graph.from_edges(2, [(0, 1)])]


def enumerate_trees(flt: FamilyFilter, resume: str | None = None,
                    shard: tuple[int, int] = (0, 1)) -> EnumerationStream:
    """One tree per isomorphism class on ``flt.n`` vertices passing the filter.

    Shards deal out level sequences round-robin by generation index.
    """
    if flt.n > MAX_TREE_ORDER:
        raise BadFilter(f"tree generation supports n <= {MAX_TREE_ORDER}")
    index, total = shard
    if not 0 <= index < total:
        raise BadFilter(f"bad shard {index}/{total}")

    def produce(position):
        skip = position[0] if position else -1
        if flt.n <= 2:
            items = ((i, g) for i, g in enumerate(_small_trees(flt.n)) if i % total == index and flt.matches(g))
        else:
            items = _tree_items(flt, shard)
        for i, g in items:
            if i > skip:
                yield [i], g

    return EnumerationStream("generated-trees", produce, resume)


def _tree_items(flt: FamilyFilter, shard: tuple[int, int] = (0, 1)) -> Iterator[tuple[int, Graph]]:
    index, total = shard
    for i, layout in enumerate(_layouts(flt.n)):
        if i % total != index:
            continue
        if flt.diameter is not None and layout_diameter(layout) != flt.diameter:
            continue
        if flt.cut_vertices is not None:
            # every non-leaf of a tree is a cut vertex
            leaves = sum(1 for j in range(1, len(layout) - 1) if layout[j + 1] <= layout[j]) + 1
            if flt.n - leaves != flt.cut_vertices:
                continue
        g = layout_to_graph(layout)
        if flt.predicate is not None and not flt.predicate(g):
            continue
        yield i, g


# -- connected graphs -----------------------------------------------------------


def _subset_reps(n: int, generators: Sequence[Sequence[int]]) -> list[int]:
    """One representative (the least mask) per orbit of non-empty subsets."""
    size = 1 << n
    if not generators:
        return list(range(1, size))
    parent = list(range(size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in generators:
        image = [0] * size
        for mask in range(1, size):
            low = mask & -mask
            image[mask] = image[mask ^ low] | (1 << g[low.bit_length() - 1])
        for mask in range(1, size):
            a, b = find(mask), find(image[mask])
            if a != b:
                if a < b:
                    parent[b] = a
                else:
                    parent[a] = b
    return [m for m in range(1, size) if find(m) == m]


def _is_cut(adj: Sequence[int], full: int, v: int) -> bool:
    rest = full & ~(1 << v)
    nb = adj[v]
    if nb & (nb - 1) == 0:
        return False
    start = (nb & -nb).bit_length() - 1
    return component_mask(adj, start, rest) != rest


def _accept(adj: list[int], n: int) -> bool:
    """Canonical deletion test for the last vertex of a connected graph."""
    x = n - 1
    full = (1 << n) - 1
    deg = [a.bit_count() for a in adj]
    score = []
    for v in range(n):
        s = 0
        for u in iter_bits(adj[v]):
            s += deg[u]
        score.append(deg[v] << 12 | s)
    fx = score[x]
    ties = []
    for v in range(x):
        if score[v] > fx:
            if not _is_cut(adj, full, v):
                return False
        elif score[v] == fx and not _is_cut(adj, full, v):
            ties.append(v)
    if not ties:
        return True
    lab = canonical_labeling(adj, n)
    pos = lab.labels
    w = max(ties + [x], key=pos.__getitem__)
    return lab.orbits[w] == lab.orbits[x]


def _children(adj: tuple[int, ...], n: int) -> list[tuple[int, ...]]:
    gens = canonical_labeling(adj, n).generators if n > 1 else ()
    out = []
    new = 1 << n
    for s in _subset_reps(n, gens):
        child = [a | new if s >> v & 1 else a for v, a in enumerate(adj)]
        child.append(s)
        if _accept(child, n + 1):
            out.append(tuple(child))
    return out


def _connected_items(flt: FamilyFilter, position: list | None, shard: tuple[int, int]) -> Iterator[tuple[list, Graph]]:
    n = flt.n
    index, total = shard
    split = min(SHARD_LEVEL, n)
    counter = [0]

    def walk(adj: tuple[int, ...], order: int, path: list[int], bounded: bool):
        if order == split:
            mine = counter[0] % total == index
            counter[0] += 1
            if not mine:
                return
        if order == n:
            if bounded and path == position:
                return
            wd = wiener_and_diameter(adj, n)
            g = Graph(n, adj, check=False)
            if flt._tail(g, wd[1]):
                yield list(path), g
            return
        lo = position[order - 1] if bounded and position else 0
        for i, child in enumerate(_children(adj, order)):
            if i < lo:
                # subtrees before the resume point still advance the shard counter
                if order + 1 <= split:
                    counter[0] += _count_at(child, order + 1, split)
                continue
            path.append(i)
            yield from walk(child, order + 1, path, bounded and i == lo)
            path.pop()

    yield from walk((0,), 1, [], position is not None)


def _count_at(adj: tuple[int, ...], order: int, level: int) -> int:
    if order == level:
        return 1
    return sum(_count_at(c, order + 1, level) for c in _children(adj, order))


def enumerate_connected_graphs(flt: FamilyFilter, resume: str | None = None,
                               shard: tuple[int, int] = (0, 1)) -> EnumerationStream:
    """One connected graph per isomorphism class on ``flt.n`` vertices passing the filter.

    ``shard=(i, t)`` keeps only the part of the search owned by shard ``i`` of
    ``t``; the shards partition the output.
    """
    if flt.n > MAX_GRAPH_ORDER:
        raise TooLargeForGeneration(
            f"built-in generation stops at n = {MAX_GRAPH_ORDER}; ingest a graph6 catalog instead")
    index, total = shard
    if not 0 <= index < total:
        raise BadFilter(f"bad shard {index}/{total}")
    return EnumerationStream("generated", lambda pos: _connected_items(flt, pos, shard), resume)


def graph6_stream(path, flt: FamilyFilter | None = None, resume: str | None = None) -> EnumerationStream:
    """Stream a graph6 catalog, keeping connected graphs that pass ``flt``."""

    def produce(position):
        skip = position[0] if position else 0
        for i, g in enumerate(read_graph6(path), start=1):
            if i <= skip:
                continue
            if flt is not None and not flt.matches(g):
                continue
            yield [i], g

    return EnumerationStream(f"graph6:{path}", produce, resume)


# -- block assembly ----------------------------------------------------------------


def is_biconnected(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and cut_vertex_mask(g.adj, g.n) == 0


def is_minimally_biconnected(g: Graph) -> bool:
    if not is_biconnected(g):
        return False
    return not any(is_biconnected(g.delete_edge(u, v)) for u, v in g.edges())


def block_catalog(max_order: int, minimal: bool = False) -> list[Graph]:
    """K2 plus every (minimally, if asked) 2-connected graph up to ``max_order``."""
    out = [Graph.from_edges(2, [(0, 1)])]
    for m in range(3, max_order + 1):
        for g in enumerate_connected_graphs(FamilyFilter(m, cut_vertices=0)):
            if not minimal or is_minimally_biconnected(g):
                out.append(g)
    return out


def _orbit_reps(g: Graph) -> list[int]:
    roots = canonical_labeling(g.adj, g.n).orbits
    return sorted(set(roots))


def enumerate_by_blocks(n: int, k: int, minimal_blocks: bool = False,
                        catalog: Iterable[Graph] | None = None) -> list[Graph]:
    """Every connected graph on ``n`` vertices with exactly ``k`` cut vertices.

    Graphs are assembled by gluing blocks at single vertices.  With
    ``minimal_blocks`` only K2 and minimally 2-connected blocks are used; the
    result then still contains every graph of the class whose blocks lose
    2-connectivity under any edge deletion, which includes every maximiser of
    the Wiener index in the class.  Output is sorted by canonical code.
    """
    if n > MAX_CANON_ORDER:
        raise TooLargeForGeneration(f"block assembly deduplicates with canonical forms, n <= {MAX_CANON_ORDER}")
    if not 0 <= k <= max(n - 2, 0):
        raise BadFilter(f"cut vertex count {k} outside 0..{n - 2}")
    if n == 1:
        return [Graph(1, [0])] if k == 0 else []
    if k == 0:
        cands = [Graph.from_edges(2, [(0, 1)])] if n == 2 else list(
            enumerate_connected_graphs(FamilyFilter(n, cut_vertices=0)))
        if minimal_blocks:
            cands = [g for g in cands if g.n == 2 or is_minimally_biconnected(g)]
        return sorted(cands, key=graph_canonical_form)
    biggest = n - k
    blocks = list(catalog) if catalog is not None else block_catalog(biggest, minimal_blocks)
    blocks = [b for b in blocks if b.n <= biggest]
    block_reps = [(b, _orbit_reps(b)) for b in blocks]

    level: dict = {}
    for b in blocks:
        level.setdefault(graph_canonical_form(b), b)
    found: dict = {}
    frontier = list(level.values())
    seen = set(level)
    while frontier:
        nxt = []
        for g in frontier:
            cuts = cut_vertex_mask(g.adj, g.n)
            c = cuts.bit_count()
            if g.n == n:
                if c == k:
                    found.setdefault(graph_canonical_form(g), g)
                continue
            for v in _orbit_reps(g):
                c2 = c + (0 if cuts >> v & 1 else 1)
                if c2 > k:
                    continue
                for b, reps in block_reps:
                    size = g.n + b.n - 1
                    if size > n or n - size < k - c2:
                        continue
                    for u in reps:
                        h = merge_at_vertex(g, v, b, u)
                        code = graph_canonical_form(h)
                        if code not in seen:
                            seen.add(code)
                            nxt.append(h)
        frontier = nxt
    return [found[c] for c in sorted(found)]
