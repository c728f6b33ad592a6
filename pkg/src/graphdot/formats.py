"""graph6 and edge-list text formats.

graph6 follows the published layout: an order prefix ``N(n)`` followed by
the upper triangle of the adjacency matrix, column by column
(``x(0,1), x(0,2), x(1,2), x(0,3), ...``), packed six bits per byte with
63 added to each byte and the last byte zero-padded.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable

from .errors import GraphParseError
from .graph import Graph

_HEADER = ">>graph6<<"


def _encode_order(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def write_graph6(g: Graph) -> str:
    bits = [1 if g.adj[j] >> i & 1 else 0 for j in range(1, g.n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = []
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k : k + 6]:
            value = value << 1 | b
        body.append(chr(value + 63))
    return _encode_order(g.n) + "".join(body)


def parse_graph6(text: str) -> Graph:
    line = text.strip()
    start = 0
    if line.startswith(_HEADER):
        start = len(_HEADER)
    try:
        data = line.encode("ascii")
    except UnicodeEncodeError as exc:
        raise GraphParseError("non-ASCII character in graph6 line", exc.start) from None
    for pos in range(start, len(data)):
        if not 63 <= data[pos] <= 126:
            raise GraphParseError(f"byte {data[pos]!r} outside graph6 range 63..126", pos)
    if start >= len(data):
        raise GraphParseError("empty graph6 line", start)

    values = [b - 63 for b in data]
    pos = start
    if values[pos] < 63:
        n, pos = values[pos], pos + 1
    else:
        width = 3
        pos += 1
        if pos < len(values) and values[pos] == 63:
            width = 6
            pos += 1
        if pos + width > len(values):
            raise GraphParseError("truncated order prefix", len(values))
        n = 0
        for v in values[pos : pos + width]:
            n = n << 6 | v
        pos += width
    if n == 0:
        raise GraphParseError("graphs with zero vertices are not supported", start)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = values[pos:]
    if len(body) < nbytes:
        raise GraphParseError(f"truncated bit vector: need {nbytes} bytes, got {len(body)}", len(values))
    if len(body) > nbytes:
        raise GraphParseError(f"{len(body) - nbytes} trailing bytes after bit vector", pos + nbytes)
    pad = nbytes * 6 - nbits
    if pad and body and body[-1] & ((1 << pad) - 1):
        raise GraphParseError("nonzero padding bits", len(values) - 1)

    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if body[k // 6] >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def write_edgelist(g: Graph) -> str:
    return "".join([f"{g.n}\n"] + [f"{i} {j}\n" for i, j in g.edges])


def parse_edgelist(text: str) -> list[Graph]:
    """Parse one or more edge-list blocks separated by blank lines.

    A block is a line ``n`` followed by lines ``i j`` with ``0 <= i < j < n``.
    """
    graphs = []
    n = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines() + [""], start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            if n is not None and not line:
                graphs.append(Graph.from_edges(n, edges))
                n, edges = None, []
            continue
        fields = line.split()
        try:
            nums = [int(f) for f in fields]
        except ValueError:
            raise GraphParseError(f"non-integer token in {line!r}", lineno) from None
        if n is None:
            if len(nums) != 1 or nums[0] < 1:
                raise GraphParseError(f"expected a positive vertex count, got {line!r}", lineno)
            n = nums[0]
            continue
        if len(nums) != 2:
            raise GraphParseError(f"expected 'i j', got {line!r}", lineno)
        i, j = nums
        if not 0 <= i < j < n:
            raise GraphParseError(f"edge {i} {j} violates 0 <= i < j < {n}", lineno)
        edges.append((i, j))
    return graphs


def parse_graphs(text: str, fmt: str = "auto") -> list[Graph]:
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")), "")
        fmt = "edgelist" if first.isdigit() else "graph6"
    if fmt == "edgelist":
        return parse_edgelist(text)
    if fmt != "graph6":
        raise ValueError(f"unknown format {fmt!r}")
    graphs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            graphs.append(parse_graph6(line))
        except GraphParseError as exc:
            raise GraphParseError(f"line {lineno}: {exc}") from None
    return graphs


def read_graphs(path: str | Path, fmt: str = "auto") -> list[Graph]:
    return parse_graphs(Path(path).read_text(encoding="utf-8"), fmt)


def dump_graph6(graphs: Iterable[Graph]) -> str:
    return "".join(write_graph6(g) + "\n" for g in graphs)
