"""Canonical codes and isomorphism tests.

General graphs use equitable-partition refinement followed by a search over
individualisations.  The search keeps every leaf certificate that is not
provably an automorphic image of one already seen, so the maximum certificate
is a true invariant of the isomorphism class; automorphisms found on the way
prune the tree and also give the vertex orbits.

Trees use the centre-rooted AHU encoding, which is linear and needs no search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotATree, TooLarge
from .graph import Graph, iter_bits

MAX_CANON_ORDER = 12


@dataclass(frozen=True, order=True)
class CanonicalCode:
    kind: str
    data: bytes = field(repr=False)

    @property
    def hex(self) -> str:
        return self.data.hex()

    def __repr__(self) -> str:
        return f"CanonicalCode({self.kind}, {self.hex})"


# -- partition refinement ---------------------------------------------------


def refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    A cell is split by how many neighbours its vertices have in a splitter
    cell; fragments are ordered by that count, which keeps the result
    independent of vertex names.
    """
    while True:
        for w in cells:
            wmask = 0
            for x in w:
                wmask |= 1 << x
            new = _split(cells, wmask, adj)
            if len(new) != len(cells):
                cells = new
                break
        else:
            return cells


def _split(cells: list[list[int]], wmask: int, adj: Sequence[int]) -> list[list[int]]:
    out = []
    for cell in cells:
        if len(cell) == 1:
            out.append(cell)
            continue
        groups: dict[int, list[int]] = {}
        for x in cell:
            groups.setdefault((adj[x] & wmask).bit_count(), []).append(x)
        if len(groups) == 1:
            out.append(cell)
        else:
            for c in sorted(groups):
                out.append(groups[c])
    return out


# -- search -------------------------------------------------------------------


class _Abort(Exception):
    def __init__(self, level: int):
        self.level = level


class _Search:
    def __init__(self, adj: Sequence[int], n: int):
        self.adj = adj
        self.n = n
        self.first_cert = None
        self.first_order: list[int] | None = None
        self.best_cert = None
        self.best_order: list[int] | None = None
        self.autos: list[list[int]] = []
        self.path: list[int] = []
        self.done: list[list[int]] = []  # completed children per level

    def cert(self, order: list[int]) -> tuple[int, ...]:
        lab = [0] * self.n
        for i, v in enumerate(order):
            lab[v] = i
        out = []
        for v in order:
            m = 0
            for u in iter_bits(self.adj[v]):
                m |= 1 << lab[u]
            out.append(m)
        return tuple(out)

    def leaf(self, cells: list[list[int]]) -> None:
        order = [c[0] for c in cells]
        c = self.cert(order)
        if self.first_cert is None:
            self.first_cert = self.best_cert = c
            self.first_order = self.best_order = order
            return
        ref = None
        if c == self.first_cert:
            ref = self.first_order
        elif c == self.best_cert:
            ref = self.best_order
        elif c > self.best_cert:
            self.best_cert, self.best_order = c, order
            return
        else:
            return
        gamma = [0] * self.n
        for a, b in zip(ref, order):
            gamma[a] = b
        self.autos.append(gamma)
        # abandon the shallowest in-progress child now known to mirror a finished one
        for level in range(len(self.path)):
            if not self.done[level]:
                continue
            roots = self._orbits(self.path[:level])
            cur = roots[self.path[level]]
            if any(roots[w] == cur for w in self.done[level]):
                raise _Abort(level)

    def _orbits(self, fixed: list[int]) -> list[int]:
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in self.autos:
            if any(g[p] != p for p in fixed):
                continue
            for x in range(self.n):
                a, b = find(x), find(g[x])
                if a != b:
                    parent[max(a, b)] = min(a, b)
        return [find(x) for x in range(self.n)]

    def run(self, cells: list[list[int]]) -> None:
        cells = refine(self.adj, cells)
        if len(cells) == self.n:
            self.leaf(cells)
            return
        idx = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[idx]
        level = len(self.path)
        self.done.append([])
        try:
            for v in target:
                if self.done[level] and self.autos:
                    roots = self._orbits(self.path)
                    rv = roots[v]
                    if any(roots[w] == rv for w in self.done[level]):
                        continue
                rest = [x for x in target if x != v]
                child = cells[:idx] + [[v], rest] + cells[idx + 1:]
                self.path.append(v)
                try:
                    self.run(child)
                except _Abort as ab:
                    if ab.level < level:
                        raise
                finally:
                    self.path.pop()
                self.done[level].append(v)
        finally:
            self.done.pop()


@dataclass(frozen=True)
class Labeling:
    order: tuple[int, ...]  # canonical position -> vertex
    cert: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    orbits: tuple[int, ...]  # vertex -> least vertex of its orbit

    @property
    def labels(self) -> list[int]:
        lab = [0] * len(self.order)
        for i, v in enumerate(self.order):
            lab[v] = i
        return lab


def canonical_labeling(adj: Sequence[int], n: int, cells: list[list[int]] | None = None) -> Labeling:
    """Canonical ordering, automorphism generators and orbits of a bitmask graph.

    ``cells`` optionally gives an ordered vertex colouring that the labeling
    must respect.
    """
    if cells is None:
        cells = [list(range(n))]
    s = _Search(adj, n)
    s.run([list(c) for c in cells])
    roots = s._orbits([])
    return Labeling(tuple(s.best_order), s.best_cert, tuple(tuple(g) for g in s.autos), tuple(roots))


def _pack_code(n: int, cert: tuple[int, ...]) -> bytes:
    """Length byte then the upper triangle, column by column, packed big-endian."""
    bits = 0
    count = 0
    for j in range(1, n):
        row = cert[j]
        for i in range(j):
            bits = bits << 1 | (row >> i & 1)
            count += 1
    pad = (-count) % 8
    bits <<= pad
    return bytes([n]) + bits.to_bytes((count + pad) // 8, "big")


def graph_canonical_form(g: Graph) -> CanonicalCode:
    if g.n > MAX_CANON_ORDER:
        raise TooLarge(f"general canonical form supports n <= {MAX_CANON_ORDER}")
    lab = canonical_labeling(g.adj, g.n)
    return CanonicalCode("general", _pack_code(g.n, lab.cert))


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabelled representative of ``g``'s class."""
    if g.n > MAX_CANON_ORDER:
        raise TooLarge(f"general canonical form supports n <= {MAX_CANON_ORDER}")
    return Graph(g.n, canonical_labeling(g.adj, g.n).cert, check=False)


def automorphism_orbits(g: Graph) -> list[list[int]]:
    roots = canonical_labeling(g.adj, g.n).orbits
    out: dict[int, list[int]] = {}
    for v, r in enumerate(roots):
        out.setdefault(r, []).append(v)
    return sorted(out.values())


# -- trees ----------------------------------------------------------------------


def tree_centers(t: Graph) -> list[int]:
    """Centre of a tree by repeated leaf stripping."""
    n = t.n
    if n <= 2:
        return list(range(n))
    deg = t.degrees()
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for u in iter_bits(t.adj[v]):
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return sorted(layer)


def _ahu(t: Graph, root: int, blocked: int) -> bytes:
    # iterative post-order: children codes sorted and wrapped
    parent = {root: -1}
    order = [root]
    for v in order:
        for u in iter_bits(t.adj[v]):
            if u != parent[v] and u != blocked:
                parent[u] = v
                order.append(u)
    codes: dict[int, list[bytes]] = {v: [] for v in order}
    for v in reversed(order):
        code = b"(" + b"".join(sorted(codes[v])) + b")"
        if parent[v] >= 0:
            codes[parent[v]].append(code)
        else:
            return code
    raise AssertionError("unreachable")


def tree_canonical_code(t: Graph) -> CanonicalCode:
    if not t.is_tree():
        raise NotATree("tree_canonical_code needs a connected graph with n-1 edges")
    centers = tree_centers(t)
    if len(centers) == 1:
        return CanonicalCode("tree", b"C" + _ahu(t, centers[0], -1))
    a, b = centers
    pair = sorted([_ahu(t, a, b), _ahu(t, b, a)])
    return CanonicalCode("tree", b"E" + pair[0] + pair[1])


def are_isomorphic(g1: Graph, g2: Graph) -> bool:
    if max(g1.n, g2.n) > MAX_CANON_ORDER:
        raise TooLarge(f"isomorphism test supports n <= {MAX_CANON_ORDER}")
    if g1.n != g2.n or g1.m != g2.m or sorted(g1.degrees()) != sorted(g2.degrees()):
        return False
    return graph_canonical_form(g1) == graph_canonical_form(g2)


def canonical_code(g: Graph) -> CanonicalCode:
    """General code up to 12 vertices, tree code beyond that."""
    if g.n <= MAX_CANON_ORDER:
        return graph_canonical_form(g)
    return tree_canonical_code(g)
