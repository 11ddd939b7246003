"""graph6 and edge-list text formats.

graph6 follows the standard definition: a size prefix ``N(n)`` followed by the
upper triangle of the adjacency matrix in column-major order (for ``j`` in
``1..n-1``, ``i`` in ``0..j-1``), packed big-endian six bits per byte, each
byte offset by 63.  The edge-list format is a header line ``n m`` followed by
``m`` lines ``u v``; blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

import sys
from pathlib import Path
from typing import IO, Iterable

from .graph import Graph, GraphError, build_graph

__all__ = [
    "FormatError",
    "Graph6Error",
    "EdgeListError",
    "parse_graph6",
    "emit_graph6",
    "parse_graph6_lines",
    "parse_edge_list",
    "emit_edge_list",
    "read_graphs",
]

HEADER = ">>graph6<<"
MAX_ORDER_SHORT = 62
MAX_ORDER_MEDIUM = 258047
MAX_ORDER_LONG = 68719476735


class FormatError(ValueError):
    def __init__(self, message: str, offset: int | None = None) -> None:
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"{message}{where}")


class Graph6Error(FormatError):
    """Malformed graph6 text; ``kind`` names the failure and ``offset`` the byte."""

    def __init__(self, kind: str, message: str, offset: int | None = None) -> None:
        self.kind = kind
        super().__init__(message, offset)


class EdgeListError(FormatError):
    """Malformed edge-list text; ``offset`` is the 1-based line number."""


def _size_prefix(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= MAX_ORDER_SHORT:
        return bytes([n + 63])
    if n <= MAX_ORDER_MEDIUM:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= MAX_ORDER_LONG:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError(f"order {n} too large for graph6")


def emit_graph6(g: Graph, header: bool = False) -> str:
    n = g.order
    out = bytearray(_size_prefix(n))
    masks = g.masks
    acc = 0
    nbits = 0
    for j in range(1, n):
        mj = masks[j]
        for i in range(j):
            acc = (acc << 1) | (mj >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    text = out.decode("ascii")
    return HEADER + text if header else text


def _digit(data: bytes, pos: int) -> int:
    if pos >= len(data):
        raise Graph6Error("truncated", "graph6 text ends inside the size field", pos)
    c = data[pos]
    if not 63 <= c <= 126:
        raise Graph6Error("malformed", f"byte {c!r} is not a graph6 character", pos)
    return c - 63


def parse_graph6(text: str | bytes) -> Graph:
    """Parse one graph6 record (an optional ``>>graph6<<`` header is accepted)."""
    data = text.encode("ascii", "replace") if isinstance(text, str) else bytes(text)
    data = data.rstrip(b"\r\n")
    start = len(HEADER) if data.startswith(HEADER.encode()) else 0
    pos = start
    first = _digit(data, pos)
    if first < 63:
        n = first
        pos += 1
    elif pos + 1 < len(data) and data[pos + 1] == 126:
        n = 0
        for k in range(6):
            n = (n << 6) | _digit(data, pos + 2 + k)
        pos += 8
    else:
        n = 0
        for k in range(3):
            n = (n << 6) | _digit(data, pos + 1 + k)
        pos += 4
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[pos:pos + nbytes]
    if len(body) < nbytes:
        raise Graph6Error(
            "truncated", f"expected {nbytes} adjacency bytes, found {len(body)}", pos + len(body)
        )
    values = []
    for k in range(nbytes):
        values.append(_digit(data, pos + k))
    if len(data) > pos + nbytes:
        raise Graph6Error("trailing", "unexpected bytes after the adjacency field", pos + nbytes)
    pad = nbytes * 6 - nbits
    if pad and values[-1] & ((1 << pad) - 1):
        raise Graph6Error("padding", "non-zero padding bits", pos + nbytes - 1)
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if values[bit // 6] >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    return build_graph(n, edges)


def parse_graph6_lines(text: str) -> list[Graph]:
    """Parse a graph6 file body: one record per non-blank line."""
    graphs = []
    for line in text.splitlines():
        line = line.strip()
        if line:
            graphs.append(parse_graph6(line))
    return graphs


def parse_edge_list(text: str) -> Graph:
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append((lineno, line.split()))
    if not rows:
        raise EdgeListError("missing 'n m' header")
    lineno, head = rows[0]
    if len(head) != 2:
        raise EdgeListError("header must be 'n m'", lineno)
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError:
        raise EdgeListError("header values must be integers", lineno) from None
    if n < 0 or m < 0:
        raise EdgeListError("negative count in header", lineno)
    body = rows[1:]
    if len(body) != m:
        raise EdgeListError(f"header announces {m} edges, found {len(body)}", lineno)
    edges = []
    for lineno, parts in body:
        if len(parts) != 2:
            raise EdgeListError("edge lines must be 'u v'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError("edge endpoints must be integers", lineno) from None
        edges.append((u, v))
    try:
        return build_graph(n, edges)
    except GraphError as exc:
        raise EdgeListError(str(exc)) from None


def emit_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.order} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def read_graphs(source: str | Path | IO[str], fmt: str = "g6") -> list[Graph]:
    """Read graphs from a path, an open text stream, or ``"-"`` for stdin.

    ``fmt`` is ``"g6"`` (one graph per line) or ``"edgelist"`` (one graph).
    """
    if isinstance(source, (str, Path)):
        if str(source) == "-":
            text = sys.stdin.read()
        else:
            text = Path(source).read_text()
    else:
        text = source.read()
    if fmt == "g6":
        return parse_graph6_lines(text)
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    raise ValueError(f"unknown format {fmt!r}")


def write_graph6_lines(graphs: Iterable[Graph]) -> str:
    return "".join(emit_graph6(g) + "\n" for g in graphs)
