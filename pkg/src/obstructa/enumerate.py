"""Isomorphism-class enumeration of small graphs.

Graphs on n vertices are produced by attaching one new vertex, with every
possible neighborhood (and multiplicity assignment), to every class on
n-1 vertices, then deduplicating by canonical code. Every graph arises
this way because removing its last vertex is such an extension in
reverse.
"""
from __future__ import annotations

from itertools import product

from .canon import canonical_form, canonical_graph
from .errors import CapExceeded
from .graphs import Graph

SIMPLE_CAP = 8
MULTI_CAP = 5


def extensions(g, max_multiplicity=1):
    """All one-vertex extensions of g, not deduplicated."""
    v = g.n
    base = g.add_vertex()
    for mults in product(range(max_multiplicity + 1), repeat=g.n):
        ed = dict(base.edges)
        for u, m in enumerate(mults):
            if m:
                ed[(u, v)] = m
        yield Graph(v + 1, ed)


def graphs_on(n, multigraph=False, max_multiplicity=None, _prev=None):
    """Sorted list of canonical representatives on exactly n vertices."""
    mm = max_multiplicity if max_multiplicity else (4 if multigraph else 1)
    if not multigraph:
        mm = 1
    if _prev is None:
        level = [Graph(0)]
        for _ in range(n):
            level = _next_level(level, mm)
        return level
    return _next_level(_prev, mm)


def _next_level(level, mm):
    seen = {}
    for g in level:
        for h in extensions(g, mm):
            code = canonical_form(h)
            if code not in seen:
                seen[code] = canonical_graph(h)
    return [seen[c] for c in sorted(seen)]


def enumerate_graphs(n_max, connected=False, multigraph=False,
                     max_multiplicity=None, cap=None):
    """Yield one representative per isomorphism class, by vertex count."""
    if cap is None:
        cap = MULTI_CAP if multigraph else SIMPLE_CAP
    if n_max > cap:
        raise CapExceeded(f"n_max={n_max} exceeds cap {cap}")
    mm = max_multiplicity if max_multiplicity else (4 if multigraph else 1)
    level = [Graph(0)]
    if not connected:
        yield level[0]
    for n in range(1, n_max + 1):
        level = graphs_on(n, multigraph, mm, _prev=level)
        for g in level:
            if connected and not g.is_connected():
                continue
            yield g
