"""graph6 reading and writing.

Each record is one line: the order N(n), then the upper triangle of the
adjacency matrix column by column (x01, x02, x12, x03, ...) packed
big-endian into 6-bit groups, each offset by 63.
"""

from __future__ import annotations

import io
import sys
from pathlib import Path
from typing import Callable, Iterable, Iterator, TextIO

from .errors import MalformedRecord, UnsupportedOrder
from .graph import MAX_ORDER, Graph

HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def encode(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = v << 1 | b
        body.append(chr(v + 63))
    return _encode_order(g.n) + "".join(body)


def decode(record: str, line_number: int = 1) -> Graph:
    s = record.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):]
    if not s:
        raise MalformedRecord(line_number, "empty record")
    if any(not 63 <= ord(ch) <= 126 for ch in s):
        raise MalformedRecord(line_number, "byte outside printable range 63..126")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise UnsupportedOrder(f"line {line_number}: order needs more than 18 bits")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n > MAX_ORDER:
        raise UnsupportedOrder(f"line {line_number}: order {n} exceeds {MAX_ORDER}")
    if n == 0:
        raise UnsupportedOrder(f"line {line_number}: empty graph")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedRecord(line_number, f"expected {(nbits + 5) // 6} data bytes, got {len(body)}")
    value = 0
    for ch in body:
        value = value << 6 | (ord(ch) - 63)
    total = 6 * len(body)
    if value & ((1 << (total - nbits)) - 1):
        raise MalformedRecord(line_number, "non-zero padding bits")
    adj = [0] * n
    k = total - 1
    for j in range(1, n):
        for i in range(j):
            if value >> k & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k -= 1
    return Graph(n, adj, check=False)


def iter_records(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    for number, line in enumerate(lines, start=1):
        line = line.rstrip("\n")
        if not line.strip():
            continue
        yield number, decode(line, number)


def read_graph6(path: str | Path | TextIO, keep: Callable[[Graph], bool] | None = None) -> Iterator[Graph]:
    """Stream graphs from a file (``"-"`` means stdin), optionally filtered."""
    if hasattr(path, "read"):
        handle, close = path, False
    elif str(path) == "-":
        handle, close = sys.stdin, False
    else:
        handle, close = open(path, "r", encoding="ascii"), True
    try:
        for _, g in iter_records(handle):
            if keep is None or keep(g):
                yield g
    finally:
        if close:
            handle.close()


def write_graph6(graphs: Iterable[Graph], path: str | Path | TextIO) -> int:
    """Write one record per line; returns the number written."""
    if hasattr(path, "write"):
        return _write(graphs, path)
    if str(path) == "-":
        return _write(graphs, sys.stdout)
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        return _write(graphs, fh)


def _write(graphs: Iterable[Graph], fh: TextIO | io.StringIO) -> int:
    count = 0
    for g in graphs:
        fh.write(encode(g) + "\n")
        count += 1
    return count
