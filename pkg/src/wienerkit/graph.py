"""Simple undirected graphs on vertices ``0..n-1`` stored as neighbour bitmasks.

Vertex ``v`` has neighbour set ``adj[v]``, an int whose bit ``u`` is set iff
``u ~ v``.  Graphs are immutable; every edit returns a new graph.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import EdgeAbsent, IndexOutOfRange, WienerKitError

MAX_ORDER = 64


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[int], *, check: bool = True):
        if not 1 <= n <= MAX_ORDER:
            raise IndexOutOfRange(f"order {n} outside 1..{MAX_ORDER}")
        adj = tuple(adj)
        if check:
            if len(adj) != n:
                raise WienerKitError("adjacency length does not match order")
            full = (1 << n) - 1
            for v, nb in enumerate(adj):
                if nb & ~full:
                    raise IndexOutOfRange(f"vertex {v} has a neighbour outside 0..{n - 1}")
                if nb >> v & 1:
                    raise WienerKitError(f"self-loop at {v}")
                for u in iter_bits(nb):
                    if not adj[u] >> v & 1:
                        raise WienerKitError(f"asymmetric adjacency between {v} and {u}")
        self.n = n
        self.adj = adj
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u}, {v}) outside 0..{n - 1}")
            if u == v:
                raise WienerKitError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, check=False)

    # -- queries -----------------------------------------------------------

    @property
    def m(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        out = []
        for u, nb in enumerate(self.adj):
            for v in iter_bits(nb >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [nb.bit_count() for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def is_connected(self) -> bool:
        return component_mask(self.adj, 0, (1 << self.n) - 1) == (1 << self.n) - 1

    def is_tree(self) -> bool:
        return self.m == self.n - 1 and self.is_connected()

    # -- edits ---------------------------------------------------------------

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise EdgeAbsent(f"({u}, {v}) is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj, check=False)

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise WienerKitError(f"self-loop at {u}")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj, check=False)

    def add_pendant(self, v: int) -> "Graph":
        """Attach a new vertex ``n`` to ``v``."""
        self._check_vertex(v)
        adj = list(self.adj) + [1 << v]
        adj[v] |= 1 << self.n
        return Graph(self.n + 1, adj, check=False)

    def add_vertex(self, neighbourhood: int) -> "Graph":
        """Append vertex ``n`` adjacent to the vertices in the bitmask."""
        if neighbourhood >> self.n:
            raise IndexOutOfRange("neighbourhood outside the vertex set")
        new = 1 << self.n
        adj = [nb | new if neighbourhood >> v & 1 else nb for v, nb in enumerate(self.adj)]
        adj.append(neighbourhood)
        return Graph(self.n + 1, adj, check=False)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise WienerKitError("relabelling is not a permutation")
        adj = [0] * self.n
        for v, nb in enumerate(self.adj):
            image = 0
            for u in iter_bits(nb):
                image |= 1 << perm[u]
            adj[perm[v]] = image
        return Graph(self.n, adj, check=False)

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``vertices`` (renumbered in ascending order).

        Returns the subgraph and the list mapping new index -> old vertex.
        """
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            nb = 0
            for u in iter_bits(self.adj[v]):
                if u in index:
                    nb |= 1 << index[u]
            adj.append(nb)
        return Graph(len(keep), adj, check=False), keep

    def remove_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.induced(u for u in range(self.n) if u != v)[0]

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{self.n - 1}")


def component_mask(adj: Sequence[int], start: int, allowed: int) -> int:
    """Vertices reachable from ``start`` using only vertices in ``allowed``."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & allowed & ~seen
        seen |= frontier
    return seen


def merge_at_vertex(g1: Graph, v1: int, g2: Graph, v2: int) -> Graph:
    """Glue ``g2`` onto ``g1`` by identifying ``v2`` with ``v1``.

    Vertices of ``g1`` keep their labels; the other vertices of ``g2`` follow
    in ascending order starting at ``g1.n``.
    """
    g1._check_vertex(v1)
    g2._check_vertex(v2)
    mapping = {}
    nxt = g1.n
    for u in range(g2.n):
        if u == v2:
            mapping[u] = v1
        else:
            mapping[u] = nxt
            nxt += 1
    edges = g1.edges() + [(mapping[a], mapping[b]) for a, b in g2.edges()]
    return Graph.from_edges(nxt, edges)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    shift = g1.n
    return Graph(g1.n + g2.n, list(g1.adj) + [nb << shift for nb in g2.adj], check=False)
