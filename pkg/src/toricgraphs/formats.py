"""Graph input/output: edge lists and the graph6 line format.

Edge lists are the native format (one ``u v`` pair per line, ``#``
comments) and preserve edge order, which fixes variable names.  graph6
carries only the adjacency matrix, so decoded graphs get their edges
indexed in row-major upper-triangle order; that convention is part of
this package's contract because every printed binomial depends on it.
"""

from __future__ import annotations

from .errors import MalformedGraph6Error, ParseError
from .graphs import Graph, build_graph

GRAPH6_HEADER = b">>graph6<<"


def parse_edge_list(text: str) -> Graph:
    """Graph from ``u v`` lines; vertices are 0..max seen."""
    edges: list[tuple[int, int]] = []
    max_vertex = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'u v', got {raw!r}", line=lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"non-integer vertex in {raw!r}", line=lineno)
        if u < 0 or v < 0:
            raise ParseError(f"negative vertex in {raw!r}", line=lineno)
        max_vertex = max(max_vertex, u, v)
        edges.append((u, v))
    return build_graph(max_vertex + 1, edges)


def serialize_edge_list(g: Graph) -> str:
    return "\n".join(f"{u} {v}" for u, v in g.edges) + ("\n" if g.edges else "")


def parse_graph6_line(data: bytes | str) -> Graph:
    """Decode one graph6 line (n <= 62, single-byte size header).

    Bits run over the upper triangle column by column per the published
    layout; edge indices are then assigned row-major, i.e. (0,1), (0,2),
    ..., (0,n-1), (1,2), ...
    """
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER):]
    if not data:
        raise MalformedGraph6Error("empty graph6 line")
    if data[0] == 126:
        raise MalformedGraph6Error("multi-byte sizes (n > 62) are not supported")
    n = data[0] - 63
    if n < 0:
        raise MalformedGraph6Error(f"size byte {data[0]} below 63")
    body = data[1:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) != nbytes:
        raise MalformedGraph6Error(
            f"expected {nbytes} adjacency bytes for n={n}, got {len(body)}"
        )
    bits: list[int] = []
    for byte in body:
        if not (63 <= byte <= 126):
            raise MalformedGraph6Error(f"byte {byte} outside 63..126")
        value = byte - 63
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    adjacency = set()
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                adjacency.add((i, j))
            idx += 1
    if any(bits[nbits:]):
        raise MalformedGraph6Error("nonzero padding bits")
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) in adjacency]
    return build_graph(n, edges)


def encode_graph6(g: Graph) -> str:
    """graph6 line for ``g`` (adjacency only; edge order is not kept)."""
    n = g.n
    if n > 62:
        raise MalformedGraph6Error("n > 62 is not supported")
    present = set(g.edges)
    bits: list[int] = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for pos in range(0, len(bits), 6):
        value = 0
        for b in bits[pos : pos + 6]:
            value = (value << 1) | b
        out.append(chr(value + 63))
    return "".join(out)


def iter_graph6_lines(text: str) -> list[tuple[int, str]]:
    """Non-empty graph6 payload lines with their 1-based line numbers."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line.startswith(GRAPH6_HEADER.decode("ascii")):
            line = line[len(GRAPH6_HEADER):]
        if line:
            out.append((lineno, line))
    return out


def binomial_to_text(b, prefix: str = "x") -> str:
    """Stable text form ``x1*x7*x9 - x2*x6*x8`` with variables by index."""

    def side(mon) -> str:
        parts = []
        for i, e in enumerate(mon, start=1):
            if e == 1:
                parts.append(f"{prefix}{i}")
            elif e > 1:
                parts.append(f"{prefix}{i}^{e}")
        return "*".join(parts) if parts else "1"

    return f"{side(b.plus)} - {side(b.minus)}"
