"""Distances, Wiener index, eccentricities, centre and median."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import Disconnected
from .graph import Graph, iter_bits


@dataclass(frozen=True)
class DistanceMatrix:
    d: np.ndarray
    vertex_sums: tuple[int, ...]
    wiener: int
    diameter: int

    @property
    def n(self) -> int:
        return len(self.vertex_sums)


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: tuple[int, ...]
    center: tuple[int, ...]
    median: tuple[int, ...]
    center_median_distance: int


def _layers(adj: Sequence[int], full: int, source: int) -> list[int]:
    """BFS layers from ``source`` as bitmasks; raises if some vertex is unreached."""
    seen = 1 << source
    frontier = seen
    layers = [frontier]
    while True:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~seen
        if not frontier:
            break
        seen |= frontier
        layers.append(frontier)
    if seen != full:
        raise Disconnected(f"vertex {source} does not reach every vertex")
    return layers


def distances(g: Graph) -> DistanceMatrix:
    """All-pairs hop distances by one BFS per vertex."""
    n, adj = g.n, g.adj
    full = (1 << n) - 1
    d = np.zeros((n, n), dtype=np.int64)
    sums = []
    diam = 0
    for s in range(n):
        layers = _layers(adj, full, s)
        total = 0
        for k, layer in enumerate(layers):
            total += k * layer.bit_count()
            for v in iter_bits(layer):
                d[s, v] = k
        sums.append(total)
        diam = max(diam, len(layers) - 1)
    return DistanceMatrix(d=d, vertex_sums=tuple(sums), wiener=sum(sums) // 2, diameter=diam)


def distance_sums(g: Graph) -> list[int]:
    """``D_G(v)`` for every vertex, without materialising the matrix."""
    full = (1 << g.n) - 1
    out = []
    for s in range(g.n):
        out.append(sum(k * layer.bit_count() for k, layer in enumerate(_layers(g.adj, full, s))))
    return out


def wiener_index(g: Graph) -> int:
    return sum(distance_sums(g)) // 2


def wiener_and_diameter(adj: Sequence[int], n: int) -> tuple[int, int] | None:
    """Hot-loop helper on raw bitmasks; ``None`` when disconnected."""
    full = (1 << n) - 1
    total = 0
    diam = 0
    for s in range(n):
        seen = 1 << s
        frontier = seen
        k = 0
        while True:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~seen
            if not frontier:
                break
            k += 1
            seen |= frontier
            total += k * frontier.bit_count()
        if seen != full:
            return None
        if k > diam:
            diam = k
    return total // 2, diam


def eccentricities(g: Graph) -> list[int]:
    full = (1 << g.n) - 1
    return [len(_layers(g.adj, full, s)) - 1 for s in range(g.n)]


def diameter(g: Graph) -> int:
    return max(eccentricities(g))


def set_distance(dm: DistanceMatrix, s1: Sequence[int], s2: Sequence[int]) -> int:
    """Minimum distance between a vertex of ``s1`` and a vertex of ``s2``."""
    return int(min(dm.d[a, b] for a in s1 for b in s2))


def center_median(g: Graph) -> EccentricityProfile:
    dm = distances(g)
    ecc = tuple(int(x) for x in dm.d.max(axis=1))
    lo = min(ecc)
    center = tuple(v for v in range(g.n) if ecc[v] == lo)
    best = min(dm.vertex_sums)
    median = tuple(v for v in range(g.n) if dm.vertex_sums[v] == best)
    return EccentricityProfile(ecc, center, median, set_distance(dm, center, median))


def compose_wiener(w1: int, w2: int, n1: int, n2: int, d1w: int, d2w: int) -> int:
    """Wiener index of two connected graphs glued at one shared vertex ``w``.

    ``d1w``/``d2w`` are the distance sums of ``w`` inside each part.
    """
    return w1 + w2 + (n1 - 1) * d2w + (n2 - 1) * d1w


def wiener_batch(adjs: Sequence[Sequence[int]], n: int) -> tuple[np.ndarray, np.ndarray]:
    """Wiener index and diameter of many same-order graphs at once.

    Level-synchronous BFS from every source in every graph, as stacked
    0/1 matrix products; layer ``k`` is the growth of the ``k``-step reach.
    Graphs leave the active batch as soon as their reach is complete.
    """
    b = len(adjs)
    total = np.zeros(b, dtype=np.int64)
    diam = np.zeros(b, dtype=np.int64)
    if b == 0 or n == 1:
        return total, diam
    rows = np.fromiter(itertools.chain.from_iterable(adjs), dtype=np.uint64, count=b * n).reshape(b, n)
    bits = np.unpackbits(rows.view(np.uint8).reshape(b, n, 8), axis=2, bitorder="little")[:, :, :n]
    step = bits.astype(np.float32)
    step += np.eye(n, dtype=np.float32)
    reach = step.copy()
    full = n * n
    active = np.arange(b)
    count = reach.sum(axis=(1, 2), dtype=np.int64)
    total += full - n  # every off-diagonal pair is at distance >= 1
    diam[:] = 1
    k = 1
    while True:
        open_ = count < full
        left = int(open_.sum())
        if left == 0:
            return total // 2, diam
        if 4 * left < 3 * active.size:
            # compact only once enough graphs have finished
            active, reach, step, count, open_ = active[open_], reach[open_], step[open_], count[open_], open_[open_]
        total[active] += full - count
        reach = np.matmul(reach, step)
        np.minimum(reach, 1.0, out=reach)
        grown = reach.sum(axis=(1, 2), dtype=np.int64)
        if (open_ & (grown == count)).any():
            raise Disconnected("a graph in the batch is disconnected")
        k += 1
        diam[active[open_]] = k
        count = grown
