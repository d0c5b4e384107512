"""Bit-exact graph6 reading and writing.

Format: a size header N(n) followed by the upper triangle of the adjacency
matrix, column by column, packed six bits per printable character (value + 63).
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import Graph6Error
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_size(n: int) -> str:
    if n < 0:
        raise ValueError("order must be non-negative")
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr((n >> s & 63) + 63) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr((n >> s & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    raise ValueError(f"order {n} too large for graph6")


def write_graph6(g: Graph) -> str:
    bits = [g.has_edge(i, j) for j in range(1, g.n) for i in range(j)]
    bits += [False] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_size(g.n) + "".join(body)


def _decode_size(s: str, start: int) -> tuple[int, int]:
    def six(pos: int, count: int) -> int:
        if len(s) < pos + count:
            raise Graph6Error("truncated size header", len(s))
        value = 0
        for i in range(pos, pos + count):
            value = value << 6 | (ord(s[i]) - 63)
        return value

    if len(s) <= start:
        raise Graph6Error("empty input", start)
    if s[start] != "~":
        return ord(s[start]) - 63, start + 1
    if len(s) > start + 1 and s[start + 1] == "~":
        n = six(start + 2, 6)
        if n <= 258047:
            raise Graph6Error("non-minimal 8-byte size header", start)
        return n, start + 8
    n = six(start + 1, 3)
    if n <= 62:
        raise Graph6Error("non-minimal 4-byte size header", start)
    return n, start + 4


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line; a leading ``>>graph6<<`` header is allowed."""
    s = text.rstrip("\r\n")
    start = len(HEADER) if s.startswith(HEADER) else 0
    for i in range(start, len(s)):
        if not 63 <= ord(s[i]) <= 126:
            raise Graph6Error(f"character {s[i]!r} outside graph6 range 63..126", i)
    n, pos = _decode_size(s, start)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    have = len(s) - pos
    if have < need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {have}", len(s))
    if have > need:
        raise Graph6Error(f"{have - need} trailing bytes after graph data", pos + need)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(s[pos + k // 6]) - 63) >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blank ones."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield parse_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(f"line {lineno}: {exc.args[0]}", exc.offset) from None


def read_graph6_file(fh: TextIO) -> list[Graph]:
    return list(read_graph6_lines(fh))
