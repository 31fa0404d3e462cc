"""graph6 and edge-list reading/writing."""
from __future__ import annotations

import re

from .errors import BadCharError, ParseError, TruncatedError
from .graph_core import Graph

HEADER = ">>graph6<<"


def _size_bytes(n: int) -> bytes:
    if n < 63:
        return bytes([63 + n])
    if n < 258048:
        return bytes([126] + [63 + (n >> s & 63) for s in (12, 6, 0)])
    return bytes([126, 126] + [63 + (n >> s & 63) for s in (30, 24, 18, 12, 6, 0)])


def write_graph6(g: Graph) -> str:
    n = g.n
    out = bytearray(_size_bytes(n))
    acc = nbits = 0
    for j in range(1, n):
        row = g.adj[j]
        for i in range(j):
            acc = (acc << 1) | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(63 + acc)
                acc = nbits = 0
    if nbits:
        out.append(63 + (acc << (6 - nbits)))
    return out.decode("ascii")


def parse_graph6(line: str | bytes) -> Graph:
    if isinstance(line, bytes):
        line = line.decode("ascii", errors="replace")
    line = line.strip()
    if line.startswith(HEADER):
        line = line[len(HEADER):]
    data = line.encode("ascii", errors="replace")
    if not data:
        raise TruncatedError("empty graph6 record")
    for pos, b in enumerate(data):
        if not 63 <= b <= 126:
            raise BadCharError(f"byte {b!r} at offset {pos} outside 63..126")
    vals = [b - 63 for b in data]
    if vals[0] < 63:
        n, rest = vals[0], vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n, rest = vals[1] << 12 | vals[2] << 6 | vals[3], vals[4:]
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = n << 6 | v
        rest = vals[8:]
    else:
        raise TruncatedError("incomplete size field")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(rest) < need:
        raise TruncatedError(f"need {need} data bytes for n={n}, got {len(rest)}")
    if len(rest) > need:
        raise ParseError(f"{len(rest) - need} trailing bytes after graph6 data")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if rest[k // 6] >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


_N_LINE = re.compile(r"^n\s*=\s*(\d+)$")


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` starts a comment; an optional ``n=<int>`` line
    (first non-comment line) fixes the vertex count."""
    n = None
    edges = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        m = _N_LINE.match(line)
        if m and first:
            n = int(m.group(1))
            first = False
            continue
        first = False
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise ParseError(f"line {lineno}: negative vertex in {raw!r}")
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    return Graph(n, edges)


def write_edge_list(g: Graph, header: bool = True) -> str:
    lines = [f"n={g.n}"] if header else []
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def read_graph_file(path) -> Graph:
    """Load a graph from a ``.g6`` file (first record) or an edge-list file."""
    with open(path, "r", encoding="ascii") as fh:
        text = fh.read()
    stripped = text.strip()
    if str(path).endswith((".g6", ".graph6")) or stripped.startswith(HEADER):
        records = [ln for ln in stripped.splitlines() if ln.strip()]
        if not records:
            raise ParseError(f"{path}: no graph6 record")
        return parse_graph6(records[0])
    return parse_edge_list(text)
