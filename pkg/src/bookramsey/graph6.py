"""graph6 encoding and decoding (bit-compatible with nauty's ``showg``/``geng``)."""

from __future__ import annotations

from .graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte index of the problem."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def serialize_graph6(g: Graph) -> str:
    bits = []
    for j in range(1, g.n):
        row = g.rows[j]
        bits.extend(row >> i & 1 for i in range(j))
    bits.extend([0] * (-len(bits) % 6))
    body = []
    for k in range(0, len(bits), 6):
        chunk = 0
        for b in bits[k : k + 6]:
            chunk = chunk << 1 | b
        body.append(chr(chunk + 63))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.rstrip("\r\n")
    pos = 0
    if text.startswith(HEADER):
        pos = len(HEADER)
    data = [ord(c) for c in text]

    def byte(i: int) -> int:
        if i >= len(data):
            raise Graph6Error("unexpected end of input", i)
        c = data[i]
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside graph6 range 63..126", i)
        return c - 63

    if pos >= len(data):
        raise Graph6Error("missing vertex-count header", pos)
    if data[pos] == 126:
        if pos + 1 < len(data) and data[pos + 1] == 126:
            n = 0
            for i in range(pos + 2, pos + 8):
                n = n << 6 | byte(i)
            pos += 8
        else:
            n = 0
            for i in range(pos + 1, pos + 4):
                n = n << 6 | byte(i)
            pos += 4
    else:
        n = byte(pos)
        pos += 1
    if n > MAX_VERTICES:
        raise Graph6Error(f"vertex count {n} above cap {MAX_VERTICES}", pos)

    nbits = n * (n - 1) // 2
    nbytes = -(-nbits // 6)
    if len(data) - pos < nbytes:
        raise Graph6Error("edge data truncated", len(data))
    if len(data) - pos > nbytes:
        raise Graph6Error("trailing garbage after edge data", pos + nbytes)

    rows = [0] * n
    i, j = 0, 1
    for k in range(nbytes):
        chunk = byte(pos + k)
        for shift in range(5, -1, -1):
            if j >= n:
                break
            if chunk >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, rows)
