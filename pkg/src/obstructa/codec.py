"""graph6 / sparse6 text codecs plus a small multigraph line format.

graph6 and sparse6 follow the published formats (printable bytes offset
by 63, optional headers). Multigraphs travel either as sparse6 (repeated
edges) or as the sidecar `multig` format: "n m  u v mult  u v mult ..."
where m is the number of distinct vertex pairs.
"""
from __future__ import annotations

from .errors import SchemaError
from .graphs import Graph

GRAPH6_HEADER = ">>graph6<<"
SPARSE6_HEADER = ">>sparse6<<"


def _encode_n(n):
    if n < 0:
        raise SchemaError("negative vertex count")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63])
    return bytes([126, 126] + [((n >> (6 * i)) & 63) + 63 for i in range(5, -1, -1)])


def _decode_n(data):
    """Returns (n, bytes consumed)."""
    if not data:
        raise SchemaError("empty graph6 data")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        if len(data) < 8:
            raise SchemaError("truncated vertex count")
        n = 0
        for b in data[2:8]:
            n = (n << 6) | (b - 63)
        return n, 8
    if len(data) < 4:
        raise SchemaError("truncated vertex count")
    n = 0
    for b in data[1:4]:
        n = (n << 6) | (b - 63)
    return n, 4


def to_graph6(g, header=False):
    if not g.simple:
        raise SchemaError("graph6 encodes simple graphs only")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    body = bytearray(_encode_n(g.n))
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k : k + 6]:
            x = (x << 1) | b
        body.append(x + 63)
    out = body.decode("ascii")
    return GRAPH6_HEADER + out if header else out


def from_graph6(text):
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):]
    data = s.encode("ascii")
    n, at = _decode_n(data)
    bits = []
    for b in data[at:]:
        if not 63 <= b <= 126:
            raise SchemaError(f"bad graph6 byte {b}")
        bits.extend((b - 63) >> (5 - i) & 1 for i in range(6))
    need = n * (n - 1) // 2
    if len(bits) < need:
        raise SchemaError("graph6 body too short")
    ed = {}
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                ed[(i, j)] = 1
            k += 1
    return Graph(n, ed)


def to_sparse6(g, header=False):
    n = g.n
    k = max(1, (n - 1).bit_length())
    bits = []

    def emit(b, x):
        bits.append(b)
        bits.extend((x >> (k - 1 - i)) & 1 for i in range(k))

    edges = []
    for (u, v), m in sorted(g.edges.items(), key=lambda e: (e[0][1], e[0][0])):
        edges.extend([(u, v)] * m)
    v = 0
    for x, y in edges:
        if y == v:
            emit(0, x)
        elif y == v + 1:
            v += 1
            emit(1, x)
        else:
            v = y
            emit(1, v)
            emit(0, x)
    # pad with 1-bits; guard the documented spurious-edge corner case
    if k < 6 and n == (1 << k) and (-len(bits)) % 6 > k and v < n - 1:
        bits.append(0)
    while len(bits) % 6:
        bits.append(1)
    body = bytearray(b":") + bytearray(_encode_n(n))
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i : i + 6]:
            x = (x << 1) | b
        body.append(x + 63)
    out = body.decode("ascii")
    return SPARSE6_HEADER + out if header else out


def from_sparse6(text):
    s = text.strip()
    if s.startswith(SPARSE6_HEADER):
        s = s[len(SPARSE6_HEADER):]
    if not s.startswith(":"):
        raise SchemaError("sparse6 must start with ':'")
    data = s[1:].encode("ascii")
    n, at = _decode_n(data)
    bits = []
    for b in data[at:]:
        if not 63 <= b <= 126:
            raise SchemaError(f"bad sparse6 byte {b}")
        bits.extend((b - 63) >> (5 - i) & 1 for i in range(6))
    k = max(1, (n - 1).bit_length())
    ed = {}
    v = 0
    i = 0
    while i + k < len(bits):
        b = bits[i]
        x = 0
        for j in range(i + 1, i + 1 + k):
            x = (x << 1) | bits[j]
        i += 1 + k
        if b:
            v += 1
        if v >= n:
            break
        if x > v:
            v = x
        elif x < n:
            if x == v:
                raise SchemaError("sparse6 loops not supported")
            key = (x, v) if x < v else (v, x)
            ed[key] = ed.get(key, 0) + 1
    return Graph(n, ed)


def to_multig(g):
    parts = [str(g.n), str(len(g.edges))]
    for (u, v), m in sorted(g.edges.items()):
        parts.extend([str(u), str(v), str(m)])
    return " ".join(parts)


def from_multig(text):
    toks = text.split()
    if len(toks) < 2:
        raise SchemaError("multig needs at least 'n m'")
    try:
        vals = [int(t) for t in toks]
    except ValueError as exc:
        raise SchemaError(f"multig tokens must be integers: {exc}") from None
    n, m = vals[0], vals[1]
    if len(vals) != 2 + 3 * m:
        raise SchemaError("multig edge count mismatch")
    ed = {}
    for i in range(m):
        u, v, mult = vals[2 + 3 * i : 5 + 3 * i]
        key = (u, v) if u < v else (v, u)
        ed[key] = ed.get(key, 0) + mult
    return Graph(n, ed)


def dump_graph(g, fmt="auto"):
    if fmt == "graph6" or (fmt == "auto" and g.simple):
        return to_graph6(g)
    if fmt == "sparse6":
        return to_sparse6(g)
    return to_multig(g)


def load_graph(text):
    s = text.strip()
    if s.startswith(SPARSE6_HEADER) or s.startswith(":"):
        return from_sparse6(s)
    if s.startswith(GRAPH6_HEADER):
        return from_graph6(s)
    toks = s.split()
    if len(toks) >= 2 and all(t.isdigit() for t in toks):
        return from_multig(s)
    return from_graph6(s)
