"""Block / cut-vertex decomposition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import Disconnected
from .graph import Graph, component_mask, iter_bits

PENDANT = "pendant"
S_PENDANT = "s-pendant"
NON_PENDANT = "non-pendant"


@dataclass(frozen=True)
class BlockCutTree:
    cut_vertices: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]
    # cut vertex -> indices of the blocks containing it
    block_adjacency: dict[int, tuple[int, ...]]
    pendant_flags: tuple[str, ...]

    @property
    def k(self) -> int:
        return len(self.cut_vertices)

    def is_pendant(self, i: int) -> bool:
        return self.pendant_flags[i] != NON_PENDANT

    def s_pendant_blocks(self) -> list[int]:
        return [i for i, f in enumerate(self.pendant_flags) if f == S_PENDANT]

    def has_disjoint_s_pendant_pair(self) -> bool:
        sp = [set(self.blocks[i]) for i in self.s_pendant_blocks()]
        return any(not (a & b) for i, a in enumerate(sp) for b in sp[i + 1:])


def cut_vertex_mask(adj: Sequence[int], n: int) -> int:
    """Bitmask of cut vertices of a connected graph given as raw bitmasks."""
    full = (1 << n) - 1
    cuts = 0
    for v in range(n):
        if adj[v].bit_count() < 2:
            continue
        rest = full & ~(1 << v)
        start = (adj[v] & -adj[v]).bit_length() - 1
        if component_mask(adj, start, rest) != rest:
            cuts |= 1 << v
    return cuts


def cut_vertices(g: Graph) -> list[int]:
    if not g.is_connected():
        raise Disconnected("cut vertices are defined here for connected graphs only")
    return list(iter_bits(cut_vertex_mask(g.adj, g.n)))


def _biconnected_edge_sets(g: Graph) -> list[set[int]]:
    """Vertex sets of the blocks via an iterative Hopcroft-Tarjan DFS."""
    n, adj = g.n, g.adj
    disc = [-1] * n
    low = [0] * n
    blocks: list[set[int]] = []
    timer = 0
    disc[0] = low[0] = timer
    timer += 1
    edge_stack: list[tuple[int, int]] = []
    stack = [(0, -1, list(iter_bits(adj[0])))]
    while stack:
        v, parent, todo = stack[-1]
        if todo:
            u = todo.pop()
            if disc[u] == -1:
                disc[u] = low[u] = timer
                timer += 1
                edge_stack.append((v, u))
                stack.append((u, v, list(iter_bits(adj[u]))))
            elif u != parent and disc[u] < disc[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], disc[u])
            continue
        stack.pop()
        if parent >= 0:
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                block: set[int] = set()
                while True:
                    a, b = edge_stack.pop()
                    block.update((a, b))
                    if (a, b) == (parent, v):
                        break
                blocks.append(block)
    return blocks


def block_cut_tree(g: Graph) -> BlockCutTree:
    if not g.is_connected():
        raise Disconnected("block decomposition requires a connected graph")
    if g.n == 1:
        return BlockCutTree((), ((0,),), {}, (NON_PENDANT,))
    blocks = sorted(tuple(sorted(b)) for b in _biconnected_edge_sets(g))
    cuts = sorted(iter_bits(cut_vertex_mask(g.adj, g.n)))
    cutset = set(cuts)
    adjacency = {c: tuple(i for i, b in enumerate(blocks) if c in b) for c in cuts}
    pendant = [sum(1 for v in b if v in cutset) == 1 for b in blocks]
    flags = []
    for i, b in enumerate(blocks):
        if not pendant[i]:
            flags.append(NON_PENDANT)
            continue
        (c,) = [v for v in b if v in cutset]
        non_pendant_here = sum(1 for j in adjacency[c] if not pendant[j])
        flags.append(S_PENDANT if non_pendant_here == 1 else PENDANT)
    return BlockCutTree(tuple(cuts), tuple(blocks), adjacency, tuple(flags))
