"""Named graph families and their exact Wiener-index closed forms.

Vertex numbering: path-like families put the longest path first as
``0..d`` and then the branches in a fixed order; the tagged cyclic graphs put the
cycle (or triangle) first.  Each builder documents its own layout.

Text syntax: ``name`` or ``name:key=value,...``, e.g. ``lollipop:n=9,g=7``,
``T21:t=2``, ``startree:c=2-3-3``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .errors import BadParameters, NoClosedForm, NonIntegerResult
from .graph import Graph


@dataclass(frozen=True)
class FamilySpec:
    tag: str
    params: tuple[tuple[str, object], ...] = field(default=())

    def __getitem__(self, key: str):
        for k, v in self.params:
            if k == key:
                return v
        raise BadParameters(f"{self.tag} needs parameter {key!r}")

    def get(self, key: str, default=None):
        for k, v in self.params:
            if k == key:
                return v
        return default

    def __str__(self) -> str:
        if not self.params:
            return self.tag
        parts = []
        for k, v in self.params:
            parts.append(f"{k}={'-'.join(map(str, v))}" if isinstance(v, tuple) else f"{k}={v}")
        return f"{self.tag}:{','.join(parts)}"


def spec(tag: str, **params) -> FamilySpec:
    """Build a FamilySpec with a normalised tag (``spec('T7', n=9)``)."""
    tag = _normalise_tag(tag)
    norm = []
    for k, v in params.items():
        norm.append((k, tuple(v) if isinstance(v, (list, tuple)) else int(v)))
    return FamilySpec(tag, tuple(sorted(norm)))


def parse_spec(text: str) -> FamilySpec:
    text = text.strip()
    name, _, rest = text.partition(":")
    params = {}
    if rest:
        for item in rest.split(","):
            key, eq, value = item.partition("=")
            if not eq:
                raise BadParameters(f"expected key=value in {item!r}")
            key = key.strip().lower()
            try:
                if key == "c":
                    params[key] = tuple(int(x) for x in value.replace(".", "-").split("-"))
                else:
                    params[key] = int(value)
            except ValueError:
                raise BadParameters(f"non-integer value in {item!r}") from None
    return spec(name, **params)


def _normalise_tag(tag: str) -> str:
    t = tag.strip()
    low = t.lower()
    aliases = {"broom": "doublebroom", "double-broom": "doublebroom", "star-tree": "startree"}
    low = aliases.get(low, low)
    if low in _SIMPLE:
        return low
    if low[:1] in ("t", "g") and low[1:].isdigit():
        up = low[0].upper() + str(int(low[1:]))
        if up in _TAGGED:
            return up
    raise BadParameters(f"unknown family {tag!r}")


# -- builders -------------------------------------------------------------------


def path_graph(n: int) -> Graph:
    _need(n >= 1, "path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with hub 0."""
    _need(n >= 2, "star needs n >= 2")
    return Graph.from_edges(n, [(0, i) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    _need(n >= 3, "cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def lollipop(n: int, g: int) -> Graph:
    """Cycle C_g with a pendant path; 0 is the pendant vertex, n-g the junction."""
    _need(g >= 3 and n >= g + 1, "lollipop needs g >= 3 and n >= g + 1")
    m = n - g
    edges = [(i, i + 1) for i in range(m)]
    cyc = list(range(m, n))
    edges += [(cyc[i], cyc[(i + 1) % g]) for i in range(g)]
    return Graph.from_edges(n, edges)


def double_broom(l: int, k: int, d: int) -> Graph:
    """Path 0..d-1 with ``l`` leaves on vertex 0 and ``k`` leaves on vertex d-1."""
    _need(l >= 1 and k >= 1 and d >= 1, "double broom needs l, k, d >= 1")
    edges = [(i, i + 1) for i in range(d - 1)]
    nxt = d
    for _ in range(l):
        edges.append((0, nxt))
        nxt += 1
    for _ in range(k):
        edges.append((d - 1, nxt))
        nxt += 1
    return Graph.from_edges(nxt, edges)


def star_tree(parts: tuple[int, ...]) -> Graph:
    """Centre 0 joined to v_1..v_t (vertices 1..t); v_i carries c_i - 1 leaves."""
    _need(len(parts) >= 1 and all(c >= 1 for c in parts), "star-tree parts must be positive")
    t = len(parts)
    n = 1 + sum(parts)
    adj = [0] * n
    adj[0] = ((1 << t) - 1) << 1
    nxt = t + 1
    for i, c in enumerate(parts, start=1):
        leaves = ((1 << (c - 1)) - 1) << nxt
        adj[i] = 1 | leaves
        for v in range(nxt, nxt + c - 1):
            adj[v] = 1 << i
        nxt += c - 1
    return Graph(n, adj, check=False)


def _spine(length: int) -> list[tuple[int, int]]:
    return [(i, i + 1) for i in range(length)]


class _Builder:
    """Edge-list helper: a spine ``0..d`` then extra vertices appended in order."""

    def __init__(self, d: int):
        self.edges = _spine(d)
        self.n = d + 1

    def hang(self, at: int, length: int = 1) -> int:
        """Hang a path of ``length`` new vertices from ``at``; returns its last vertex."""
        prev = at
        for _ in range(length):
            self.edges.append((prev, self.n))
            prev = self.n
            self.n += 1
        return prev

    def graph(self) -> Graph:
        return Graph.from_edges(self.n, self.edges)


def tree_t1_to_t4(which: int) -> Graph:
    """Trees of diameter 7 on 12 vertices: spine v0..v7 then the four labelled extras."""
    b = _Builder(7)
    if which == 1:
        b.hang(2, 2)              # a1, b1 below v2
        b.hang(4)                 # c1
        b.hang(4)                 # d1
    elif which == 2:
        b.hang(2, 2)              # a2, b2
        b.hang(4)                 # c2
        b.hang(5)                 # d2
    elif which == 3:
        b.hang(1)                 # a3
        b.hang(1)                 # b3
        b.hang(6)                 # c3
        b.hang(6)                 # d3
    else:
        b.hang(2, 2)              # a4, b4
        b.hang(5, 2)              # c4, d4
    return b.graph()


def tree_t5() -> Graph:
    # spine of length 4 with leaves at v1, v2 and v3
    b = _Builder(4)
    b.hang(1)
    b.hang(3)
    b.hang(2)
    return b.graph()


def tree_t6() -> Graph:
    # spine of length 4 whose second vertex carries three more leaves
    b = _Builder(4)
    for _ in range(3):
        b.hang(1)
    return b.graph()


def tree_n_minus_4(which: int, n: int) -> Graph:
    """Candidates of diameter n-4; spine v0..v_{n-4}."""
    _need(n >= (10 if which == 10 else 9), f"T{which} needs n >= {10 if which == 10 else 9}")
    d = n - 4
    b = _Builder(d)
    if which == 7:
        b.hang(1)
        b.hang(d - 1)
        b.hang(d - 1)
    elif which == 8:
        b.hang(1)
        b.hang(2, 2)
    elif which == 9:
        b.hang(d - 1)
        b.hang(2, 2)
    else:
        b.hang(3, 3)
    return b.graph()


_N5_MIN = {18: 11, 19: 11, 20: 13}


def tree_n_minus_5(which: int, n: int) -> Graph:
    """Candidates of diameter n-5; spine v0..v_{n-5}."""
    lo = _N5_MIN.get(which, 10)
    _need(n >= lo, f"T{which} needs n >= {lo}")
    d = n - 5
    b = _Builder(d)
    if which == 11:
        b.hang(1)
        b.hang(1)
        b.hang(d - 1)
        b.hang(d - 1)
    elif which == 12:
        b.hang(2, 2)
        b.hang(d - 1)
        b.hang(d - 1)
    elif which == 13:
        b.hang(1)
        b.hang(2, 2)
        b.hang(d - 1)
    elif which == 14:
        b.hang(1)
        a = b.hang(2)
        b.hang(a)
        b.hang(a)
    elif which == 15:
        a = b.hang(2)
        for _ in range(3):
            b.hang(a)
    elif which == 16:
        b.hang(2, 2)
        b.hang(2, 2)
    elif which == 17:
        b.hang(2, 2)
        b.hang(d - 2, 2)
    elif which == 18:
        b.hang(3, 3)
        b.hang(d - 1)
    elif which == 19:
        mid = b.hang(3, 2)
        b.hang(mid)
        b.hang(mid)
    else:
        b.hang(4, 4)
    return b.graph()


def tree_t21(t: int) -> Graph:
    """Spine v0..v_{2t}; two paths of t vertices hang from v_t (n = 4t+1)."""
    _need(t >= 1, "T21 needs t >= 1")
    b = _Builder(2 * t)
    b.hang(t, t)
    b.hang(t, t)
    return b.graph()


def graph_g0_to_g2(which: int) -> Graph:
    """Edge-deletion sequence in the class with n=7, k=2, d=3.

    Pentagon 0-1-2-3-4, chord 2-4, pendant 5 on 2 and 6 on 4.  G1 drops the
    edge 3-4 (e1) and G2 also drops 0-1 (e2).
    """
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 4), (2, 5), (4, 6)]
    if which >= 1:
        edges.remove((3, 4))
    if which >= 2:
        edges.remove((0, 1))
    return Graph.from_edges(7, edges)


def graph_g3() -> Graph:
    # triangle a=0, b=1, c=2; one leaf on b, one on c, two on a
    return Graph.from_edges(7, [(0, 1), (1, 2), (2, 0), (1, 3), (2, 4), (0, 5), (0, 6)])


def graph_g4_to_g6(which: int) -> Graph:
    """Triangle a=0, b=1, c=2 with leaves 3 on b and 4 on c, plus a pendant block at a."""
    edges = [(0, 1), (1, 2), (2, 0), (1, 3), (2, 4)]
    if which == 4:
        edges += [(0, 5), (5, 6), (6, 7), (7, 0), (0, 8)]
    elif which == 5:
        edges += [(0, 5), (5, 6), (6, 7), (7, 0), (2, 8)]
    else:
        edges += [(0, 5), (5, 6), (6, 7), (7, 8), (8, 0)]
    return Graph.from_edges(9, edges)


def graph_g7_to_g10(which: int) -> Graph:
    """Edge-minimal, not tree-reducible graphs with n=9, k=3, d=4.

    G7/G8: hexagon 0..5 with three leaves 6, 7, 8; G9/G10: pentagon 0..4 with
    four leaves 5..8.
    """
    if which in (7, 8):
        edges = [(i, (i + 1) % 6) for i in range(6)]
        hosts = (4, 2, 0) if which == 7 else (1, 2, 3)
        edges += [(h, 6 + i) for i, h in enumerate(hosts)]
    else:
        edges = [(i, (i + 1) % 5) for i in range(5)]
        hosts = (1, 3, 3, 0) if which == 9 else (1, 1, 3, 0)
        edges += [(h, 5 + i) for i, h in enumerate(hosts)]
    return Graph.from_edges(9, edges)


def graph_g11(t: int) -> Graph:
    """4-cycle va=0, vb=1, vc=2, vd=3 with chord va-vc; paths of t+1, t, t, t vertices (n = 4t+1)."""
    _need(t >= 1, "G11 needs t >= 1")
    edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]
    b = _Hanger(4, edges)
    b.hang(0, t)
    for v in (1, 2, 3):
        b.hang(v, t - 1)
    return b.graph()


def graph_g12(t: int) -> Graph:
    """Triangle A=0, B=1, C=2; paths of t new vertices from B, C and twice from A (n = 4t+3)."""
    _need(t >= 1, "G12 needs t >= 1")
    b = _Hanger(3, [(0, 1), (1, 2), (2, 0)])
    b.hang(1, t)
    b.hang(2, t)
    b.hang(0, t)
    b.hang(0, t)
    return b.graph()


class _Hanger(_Builder):
    def __init__(self, n: int, edges: list[tuple[int, int]]):
        self.edges = list(edges)
        self.n = n


# -- closed forms --------------------------------------------------------------------


def _exact(value: Fraction) -> int:
    if value.denominator != 1:
        raise NonIntegerResult(f"closed form produced {value}")
    return int(value)


def wiener_path(n: int) -> int:
    _need(n >= 1, "path needs n >= 1")
    return math.comb(n + 1, 3)


def wiener_star(n: int) -> int:
    _need(n >= 2, "star needs n >= 2")
    return (n - 1) ** 2


def wiener_cycle(n: int) -> int:
    _need(n >= 3, "cycle needs n >= 3")
    if n % 2 == 0:
        return _exact(Fraction(n ** 3, 8))
    return _exact(Fraction(n * (n * n - 1), 8))


def wiener_lollipop(n: int, g: int) -> int:
    _need(g >= 3 and n >= g + 1, "lollipop needs g >= 3 and n >= g + 1")
    tail = Fraction(n * n + n * g + 3 * g - 1, 6) - Fraction(g * g, 12)
    if g % 2 == 0:
        return _exact(Fraction(g ** 3, 8) + (n - g) * tail)
    return _exact(Fraction(g * (g * g - 1), 8) + (n - g) * (tail - Fraction(1, 4)))


def wiener_double_broom(l: int, k: int, d: int) -> int:
    _need(l >= 1 and k >= 1 and d >= 1, "double broom needs l, k, d >= 1")
    # path part, leaves to the path, leaf pairs on one side, leaf pairs across
    return (math.comb(d + 1, 3) + (l + k) * d * (d + 1) // 2
            + 2 * math.comb(l, 2) + 2 * math.comb(k, 2) + l * k * (d + 1))


def caterpillar_max_wiener(n: int, d: int) -> int:
    """Wiener index of the best caterpillar of diameter ``d`` on ``n`` vertices."""
    _need(2 <= d <= n - 1, "caterpillar needs 2 <= d <= n-1")
    r = n - d + 1
    base = Fraction(math.comb(d, 3)) + Fraction(r, 2) * ((d - 1) ** 2 + d - 3)
    if (n - d) % 2 == 1:
        return _exact(base + Fraction(r * r, 4) * (d + 2))
    return _exact(base + Fraction(r * r - 1, 4) * (d + 2) + 1)


def wiener_star_tree(parts: tuple[int, ...]) -> int:
    _need(len(parts) >= 1 and all(c >= 1 for c in parts), "star-tree parts must be positive")
    # t spokes carrying a leaves in total, x_i = c_i - 1 on spoke i
    t = len(parts)
    a = sum(parts) - t
    sq = sum((c - 1) * (c - 1) for c in parts)
    return t * t + 3 * t * a - a + 2 * a * a - sq


def wagner_partition(n: int) -> tuple[int, ...]:
    """Degree partition of the star-tree with the largest Wiener index among diameters 2..4."""
    _need(n >= 3, "needs n >= 3")
    k = math.isqrt(n - 1)
    if k * k + k > n - 1:
        small, big = k * k + k - n + 1, n - 1 - k * k
    else:
        small, big = k * k + 2 * k - n + 2, n - 1 - k * k - k
    return (k,) * small + (k + 1,) * big


def wiener_hanging_paths(block_distances: list[list[int]], block_wiener: int, lengths: list[int]) -> int:
    """Wiener index of a block whose vertex ``i`` carries a path of ``lengths[i]`` new vertices."""
    m = len(lengths)
    total = block_wiener
    for p in lengths:
        total += math.comb(p + 2, 3)  # path of p+1 vertices, block vertex included
    for i in range(m):
        for j in range(i + 1, m):
            pi, pj, dij = lengths[i], lengths[j], block_distances[i][j]
            # pairs inside the block itself are in block_wiener already
            total += ((pj + 1) * pi * (pi + 1) // 2 + (pi + 1) * pj * (pj + 1) // 2
                      + (pi + 1) * (pj + 1) * dij - dij)
    return total


_CUBIC_N4 = {7: (-25, 84), 8: (-43, 234), 9: (-31, 138), 10: (-55, 378)}
_CUBIC_N5 = {11: (-37, 132), 12: (-43, 186), 13: (-49, 252), 14: (-67, 414), 15: (-67, 402),
             16: (-73, 456), 17: (-49, 240), 18: (-61, 396), 19: (-79, 594), 20: (-97, 864)}
_KNOWN_VALUES = {"T1": 213, "T2": 218, "T3": 236, "T4": 230, "T5": 65, "T6": 62,
              "G3": 40, "G7": 84, "G8": 82, "G9": 80, "G10": 79}


def wiener_t21(t: int) -> int:
    n = 4 * t + 1
    return _exact(Fraction(5 * n ** 3 + 9 * n * n - 17 * n + 3, 48))


def wiener_g12(t: int) -> int:
    n = 4 * t + 3
    return _exact(Fraction(5 * n ** 3 + 6 * n * n - 11 * n - 12, 48))


def wiener_g11(t: int) -> int:
    # K4 minus the edge vb-vd: only that pair is at distance 2
    dist = [[0, 1, 1, 1], [1, 0, 1, 2], [1, 1, 0, 1], [1, 2, 1, 0]]
    return wiener_hanging_paths(dist, 7, [t, t - 1, t - 1, t - 1])


# -- registry --------------------------------------------------------------------------


_SIMPLE: dict[str, tuple[tuple[str, ...], Callable, Callable | None]] = {
    "path": (("n",), lambda p: path_graph(p["n"]), lambda p: wiener_path(p["n"])),
    "star": (("n",), lambda p: star_graph(p["n"]), lambda p: wiener_star(p["n"])),
    "cycle": (("n",), lambda p: cycle_graph(p["n"]), lambda p: wiener_cycle(p["n"])),
    "lollipop": (("g", "n"), lambda p: lollipop(p["n"], p["g"]), lambda p: wiener_lollipop(p["n"], p["g"])),
    "doublebroom": (("d", "k", "l"), lambda p: double_broom(p["l"], p["k"], p["d"]),
                    lambda p: wiener_double_broom(p["l"], p["k"], p["d"])),
    "startree": (("c",), lambda p: star_tree(p["c"]), lambda p: wiener_star_tree(p["c"])),
}

_TAGGED: dict[str, tuple[tuple[str, ...], Callable, Callable | None]] = {}
for _i in range(1, 5):
    _TAGGED[f"T{_i}"] = ((), lambda p, i=_i: tree_t1_to_t4(i), None)
_TAGGED["T5"] = ((), lambda p: tree_t5(), None)
_TAGGED["T6"] = ((), lambda p: tree_t6(), None)
for _i, (_a, _b) in {**_CUBIC_N4, **_CUBIC_N5}.items():
    _build = tree_n_minus_4 if _i <= 10 else tree_n_minus_5
    _TAGGED[f"T{_i}"] = (("n",), lambda p, i=_i, f=_build: f(i, p["n"]),
                         lambda p, a=_a, b=_b: _exact(Fraction(p["n"] ** 3 + a * p["n"] + b, 6)))
_TAGGED["T21"] = (("t",), lambda p: tree_t21(p["t"]), lambda p: wiener_t21(p["t"]))
for _i in range(3):
    _TAGGED[f"G{_i}"] = ((), lambda p, i=_i: graph_g0_to_g2(i), None)
_TAGGED["G3"] = ((), lambda p: graph_g3(), None)
for _i in (4, 5, 6):
    _TAGGED[f"G{_i}"] = ((), lambda p, i=_i: graph_g4_to_g6(i), None)
for _i in (7, 8, 9, 10):
    _TAGGED[f"G{_i}"] = ((), lambda p, i=_i: graph_g7_to_g10(i), None)
_TAGGED["G11"] = (("t",), lambda p: graph_g11(p["t"]), lambda p: wiener_g11(p["t"]))
_TAGGED["G12"] = (("t",), lambda p: graph_g12(p["t"]), lambda p: wiener_g12(p["t"]))


def _entry(s: FamilySpec):
    entry = _SIMPLE.get(s.tag) or _TAGGED.get(s.tag)
    if entry is None:
        raise BadParameters(f"unknown family {s.tag!r}")
    names = tuple(sorted(k for k, _ in s.params))
    if names != tuple(sorted(entry[0])):
        raise BadParameters(f"{s.tag} takes parameters {sorted(entry[0])}, got {list(names)}")
    return entry


def build(s: FamilySpec) -> Graph:
    _, builder, _ = _entry(s)
    params = dict(s.params)
    if s.tag == "startree":
        return builder(params)
    for k, v in params.items():
        if not isinstance(v, int):
            raise BadParameters(f"{k} must be an integer")
    return builder(params)


def closed_form_wiener(s: FamilySpec) -> int:
    _, builder, formula = _entry(s)
    if s.tag not in _SIMPLE:
        build(s)  # validates the parameter domain
    if s.tag in _KNOWN_VALUES:
        return _KNOWN_VALUES[s.tag]
    if formula is None:
        raise NoClosedForm(f"{s.tag} has no closed form")
    return formula(dict(s.params))


def has_closed_form(tag: str) -> bool:
    tag = _normalise_tag(tag)
    entry = _SIMPLE.get(tag) or _TAGGED[tag]
    return tag in _KNOWN_VALUES or entry[2] is not None


def all_tags() -> list[str]:
    return list(_SIMPLE) + list(_TAGGED)


def vertex_distance_closed_form(family: str, n: int, i: int) -> int:
    """``D(v_i)`` on the path ``v_0..v_{n-1}`` or on any vertex of the cycle."""
    family = _normalise_tag(family)
    _need(0 <= i <= n - 1, f"vertex index {i} outside 0..{n - 1}")
    if family == "path":
        return _exact(Fraction(n * n + 2 * i * i - (2 * n - 2) * i - n, 2))
    if family == "cycle":
        _need(n >= 3, "cycle needs n >= 3")
        return _exact(Fraction(n * n, 4) if n % 2 == 0 else Fraction(n * n - 1, 4))
    raise BadParameters("vertex distance closed form exists for path and cycle only")


def lollipop_pendant_distance(n: int, g: int) -> int:
    """``D(z)`` for the pendant vertex ``z`` of the lollipop with girth ``g``."""
    _need(g >= 3 and n >= g + 1, "lollipop needs g >= 3 and n >= g + 1")
    m = n - g
    return m * (m + 1) // 2 + (g - 1) * m + vertex_distance_closed_form("cycle", g, 0)


def _need(ok: bool, message: str) -> None:
    if not ok:
        raise BadParameters(message)
