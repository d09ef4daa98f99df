"""graph6 codec: 6-bit packing of the adjacency upper triangle.

Bit order is column-major: (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
Bits are packed big-endian into 6-bit groups, zero-padded, and offset by 63
into printable ASCII.  One graph per line in .g6 files.
"""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .graph import MAX_VERTICES, Graph


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _encode_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    # 63 <= n <= 64 here; the standard 3-byte form covers up to 258047.
    return "~" + "".join(chr(63 + (n >> s & 0x3F)) for s in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    """Encode a graph as a graph6 string (identity labeling preserved)."""
    bits = []
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            bits.append(col >> i & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = [_encode_size(g.n)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        chars.append(chr(val + 63))
    return "".join(chars)


def graph6_decode(s: str) -> Graph:
    """Decode a graph6 string; rejects malformed input and wrong lengths."""
    s = s.strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 alphabet")
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
    else:
        if len(s) < 4 or s[1] == "~":
            raise Graph6Error("unsupported or truncated size header")
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        body = s[4:]
    if n < 1:
        raise Graph6Error(f"vertex count {n} out of range")
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} exceeds the {MAX_VERTICES}-vertex limit")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(body) != expect:
        raise Graph6Error(f"body length {len(body)} != {expect} for n={n}")
    bits = []
    for ch in body:
        val = ord(ch) - 63
        bits.extend(val >> s6 & 1 for s6 in (5, 4, 3, 2, 1, 0))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


def read_graph6(stream: TextIO) -> Iterator[Graph]:
    """Yield graphs from a stream of graph6 lines (blank lines skipped)."""
    for line in stream:
        line = line.strip()
        if line:
            yield graph6_decode(line)


def write_graph6(stream: TextIO, graphs: Iterable[Graph]) -> None:
    for g in graphs:
        stream.write(graph6_encode(g) + "\n")
