"""graph6 text codec: printable 6-bit packing of the upper adjacency triangle.

Encoding follows the published format exactly: an N(n) size header, then the
column-major upper-triangle bits x(0,1), x(0,2), x(1,2), x(0,3), ... padded
with zeros to a multiple of six, each 6-bit group stored as one byte
offset by 63.
"""

from __future__ import annotations

from .graphs import Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _encode_n(n: int) -> str:
    if n < 0:
        raise Graph6Error(f"negative vertex count {n}")
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    if n <= 68719476735:
        return "~~" + "".join(chr(63 + ((n >> s) & 63)) for s in (30, 24, 18, 12, 6, 0))
    raise Graph6Error(f"vertex count {n} too large for graph6")


def graph6_encode(g: Graph) -> str:
    n = g.n
    out = [_encode_n(n)]
    acc = 0
    nbits = 0
    for v in range(1, n):
        for u in range(v):
            acc = (acc << 1) | (1 if g.has_edge(u, v) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = 0
                nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER) :].strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    vals = []
    for ch in s:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"byte {code} outside graph6 range 63..126")
        vals.append(code - 63)

    if vals[0] < 63:
        n = vals[0]
        body = vals[1:]
    elif len(vals) >= 4 and vals[1] < 63:
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body = vals[4:]
    elif len(vals) >= 8 and vals[1] == 63:
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body = vals[8:]
    else:
        raise Graph6Error("malformed graph6 size header")

    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} data bytes for n={n}, got {len(body)}")

    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[idx // 6]
            bit = (byte >> (5 - idx % 6)) & 1
            if bit:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    if need and nbits % 6:
        trailing = body[-1] & ((1 << (6 - nbits % 6)) - 1)
        if trailing:
            raise Graph6Error("nonzero trailing padding bits")
    return Graph(n, tuple(rows))
