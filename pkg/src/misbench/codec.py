from __future__ import annotations

from pathlib import Path
from typing import Literal, Union

from .const import GRAPH6_HEADER, GRAPH6_OFFSET, GRAPH6_SHORT_MAX, MAX_ORDER
from .exception import GraphFormatError, GuardViolation, PreconditionViolation
from .graph import Graph

GraphFormat = Literal["auto", "graph6", "edgelist"]

EXTENDED_MARKER = "~"


def _pair_bits(n: int) -> int:
    return n * (n - 1) // 2


def _encode_order(n: int) -> str:
    if n <= GRAPH6_SHORT_MAX:
        return chr(n + GRAPH6_OFFSET)
    return EXTENDED_MARKER + "".join(
        chr(((n >> shift) & 0x3F) + GRAPH6_OFFSET) for shift in (12, 6, 0)
    )


def _decode_order(data: str) -> tuple[int, int]:
    """Return ``(n, header_length)``."""
    if not data:
        raise GraphFormatError("empty graph6 string", 0)
    if data[0] != EXTENDED_MARKER:
        return ord(data[0]) - GRAPH6_OFFSET, 1
    if len(data) > 1 and data[1] == EXTENDED_MARKER:
        raise GuardViolation("order", MAX_ORDER, 258048)
    if len(data) < 4:
        raise GraphFormatError("truncated extended order header", len(data))
    n = 0
    for char in data[1:4]:
        n = (n << 6) | (ord(char) - GRAPH6_OFFSET)
    return n, 4


def serialize_graph6(g: Graph) -> str:
    """Encode ``g`` as graph6: column-major upper triangle in 6-bit chunks."""
    out = [_encode_order(g.n)]
    chunk = 0
    filled = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            chunk = (chunk << 1) | (row >> i & 1)
            filled += 1
            if filled == 6:
                out.append(chr(chunk + GRAPH6_OFFSET))
                chunk = 0
                filled = 0
    if filled:
        out.append(chr((chunk << (6 - filled)) + GRAPH6_OFFSET))
    return "".join(out)


def decode_ascii(data: bytes) -> str:
    try:
        return data.decode("ascii")
    except UnicodeDecodeError as e:
        raise GraphFormatError(f"non-ASCII byte {data[e.start]:#04x}", e.start) from e


def parse_graph6(text: Union[str, bytes]) -> Graph:
    data = decode_ascii(text) if isinstance(text, bytes) else text
    data = data.strip()
    if data.startswith(GRAPH6_HEADER):
        data = data[len(GRAPH6_HEADER) :]
    for position, char in enumerate(data):
        if not GRAPH6_OFFSET <= ord(char) <= GRAPH6_OFFSET + 63:
            raise GraphFormatError(f"illegal graph6 character {char!r}", position)
    n, offset = _decode_order(data)
    if n > MAX_ORDER:
        raise GuardViolation("order", MAX_ORDER, n)
    body = data[offset:]
    expected = -(-_pair_bits(n) // 6)
    if len(body) != expected:
        raise GraphFormatError(
            f"graph6 body has {len(body)} bytes, expected {expected} for n={n}",
            offset + min(len(body), expected),
        )
    rows = [0] * n
    index = 0
    total = _pair_bits(n)
    i, j = 0, 1
    for position, char in enumerate(body):
        value = ord(char) - GRAPH6_OFFSET
        for shift in range(5, -1, -1):
            flag = value >> shift & 1
            if index >= total:
                if flag:
                    raise GraphFormatError(
                        "nonzero padding bits", offset + position
                    )
                continue
            if flag:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            index += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def serialize_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"u v"`` (0-indexed)."""
    lines = [
        (number, line.split("#", 1)[0].split())
        for number, line in enumerate(text.splitlines(), 1)
    ]
    lines = [(number, parts) for number, parts in lines if parts]
    if not lines:
        raise GraphFormatError("empty edge list", 0)
    try:
        number, header = lines[0]
        n, m = (int(part) for part in header)
        edges = []
        for number, parts in lines[1:]:
            u, v = (int(part) for part in parts)
            edges.append((u, v))
    except ValueError as e:
        raise GraphFormatError(f"malformed edge list line: {e}", number) from e
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}", 1)
    if n > MAX_ORDER:
        raise GuardViolation("order", MAX_ORDER, n)
    try:
        return Graph.from_edges(n, edges)
    except PreconditionViolation as e:
        raise GraphFormatError(f"invalid edge {e.witness!r}: {e.message}") from e


def detect_format(text: str) -> GraphFormat:
    for line in text.splitlines():
        parts = line.split("#", 1)[0].split()
        if not parts:
            continue
        if len(parts) == 2 and all(part.isdigit() for part in parts):
            return "edgelist"
        return "graph6"
    raise GraphFormatError("no graph found in input", 0)


def parse_graphs(text: str, fmt: GraphFormat = "auto") -> list[Graph]:
    """Parse one edge list, or one graph6 string per line."""
    if fmt == "auto":
        fmt = detect_format(text)
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    return [parse_graph6(line) for line in text.splitlines() if line.strip()]


def read_graphs(path: Union[str, Path], fmt: GraphFormat = "auto") -> list[Graph]:
    return parse_graphs(decode_ascii(Path(path).read_bytes()), fmt)
