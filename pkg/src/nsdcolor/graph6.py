"""graph6 codec, short form only (n < 63).

Layout: one byte 63+n, then ceil(n(n-1)/2 / 6) data bytes.  Each data byte
carries six bits (most significant first) of the upper adjacency triangle
read column by column: pairs (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
Data bytes are offset by 63, so every legal byte falls in 63..126.

Input may carry the optional ">>graph6<<" header and trailing line ends;
output never includes either.  Long-form encodings (first byte 126) are
rejected as TooLarge.  Extra data bytes or nonzero padding bits raise
TrailingGarbage; missing bytes raise TruncatedBits.
"""

from __future__ import annotations

from .errors import InvalidChar, TooLarge, TrailingGarbage, TruncatedBits
from .graphs import Graph

HEADER = b">>graph6<<"
MAX_SHORT_N = 62


def _triangle_pairs(n: int):
    for j in range(1, n):
        for i in range(j):
            yield i, j


def parse_graph6(line: bytes | str) -> Graph:
    """Decode one graph6 line into a Graph."""
    if isinstance(line, str):
        data = line.encode("ascii", errors="strict")
    else:
        data = bytes(line)
    data = data.strip()
    if data.startswith(HEADER):
        data = data[len(HEADER):]
    if not data:
        raise TruncatedBits("empty graph6 line")
    first = data[0]
    if first == 126:
        raise TooLarge("long-form graph6 (n >= 63) is not supported")
    if not 63 <= first <= 126:
        raise InvalidChar(f"vertex-count byte {first} outside 63..126")
    n = first - 63
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[1:]
    for b in body:
        if not 63 <= b <= 126:
            raise InvalidChar(f"data byte {b} outside 63..126")
    if len(body) < need:
        raise TruncatedBits(f"need {need} data bytes for n={n}, got {len(body)}")
    if len(body) > need:
        raise TrailingGarbage(f"{len(body) - need} data bytes past the triangle")
    bits = 0
    for b in body:
        bits = (bits << 6) | (b - 63)
    total = need * 6
    pad = total - nbits
    if pad and bits & ((1 << pad) - 1):
        raise TrailingGarbage("nonzero padding bits")
    edges = []
    for k, (i, j) in enumerate(_triangle_pairs(n)):
        if bits >> (total - 1 - k) & 1:
            edges.append((i, j))
    return Graph(n, edges)


def emit_graph6(g: Graph) -> str:
    """Encode a Graph as a canonical short-form graph6 line (no header)."""
    if g.n > MAX_SHORT_N:
        raise TooLarge(f"short form tops out at n={MAX_SHORT_N}, got {g.n}")
    nbits = g.n * (g.n - 1) // 2
    edge_set = set(g.edges)
    bits = 0
    for i, j in _triangle_pairs(g.n):
        bits = (bits << 1) | ((i, j) in edge_set)
    pad = (-nbits) % 6
    bits <<= pad
    out = [chr(63 + g.n)]
    for shift in range(nbits + pad - 6, -1, -6):
        out.append(chr(63 + (bits >> shift & 63)))
    return "".join(out)
