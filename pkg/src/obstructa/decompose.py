"""Structural decompositions: c-blocks and clique-separator atoms."""
from __future__ import annotations

from itertools import combinations

from .canon import canonical_form
from .graphs import Graph


def _blocks_simple(g):
    """Vertex sets of the blocks (biconnected components, bridges) plus
    isolated vertices."""
    import networkx as nx

    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(g.edges.keys())
    out = [set(b) for b in nx.biconnected_components(nxg)]
    out.extend({v} for v in range(g.n) if not g.adj[v])
    return sorted(out, key=sorted)


def c_blocks(g, c):
    """The c-blocks of g as graphs.

    c=0: the whole graph (every graph counts as 0-connected).
    c=1: connected components (including isolated vertices).
    c=2: biconnected components, bridges, isolated vertices.
    """
    if c == 0:
        return [g]
    if c == 1:
        return g.component_graphs()
    if c == 2:
        return [g.induced(vs) for vs in _blocks_simple(g)]
    raise ValueError("c must be 0, 1 or 2")


def _clique_separator(g):
    """Smallest clique separator of g, or None.

    Ties among same-size separators break on the canonical code of the
    induced separator, then on the vertex tuple, for determinism.
    """
    best = None
    for size in range(max(0, g.n - 1)):
        cands = []
        for sub in combinations(range(g.n), size):
            s = set(sub)
            if any(not g.has_edge(u, v) for u, v in combinations(sub, 2)):
                continue
            rest = g.induced([v for v in range(g.n) if v not in s])
            if rest.n and not rest.is_connected():
                cands.append((canonical_form(g.induced(s)), sub, s))
        if cands:
            best = min(cands)[2]
            break
    return best


def clique_sum_atoms(g):
    """Atoms of recursive decomposition along clique separators.

    Returns a list of graphs (atoms may repeat up to isomorphism). Each
    atom has no clique separator.
    """
    sep = _clique_separator(g)
    if sep is None:
        return [g]
    keep = [v for v in range(g.n) if v not in sep]
    rest = g.induced(keep)
    out = []
    for comp in rest.components():
        part = sorted(sep | {keep[i] for i in comp})
        out.extend(clique_sum_atoms(g.induced(part)))
    return out


def atom_vertex_sets(g):
    """Vertex sets of the atoms in g's own labeling (for reassembly
    checks)."""
    sep = _clique_separator(g)
    if sep is None:
        return [set(range(g.n))]
    keep = [v for v in range(g.n) if v not in sep]
    rest = g.induced(keep)
    out = []
    for comp in rest.components():
        part = sorted(sep | {keep[i] for i in comp})
        sub = g.induced(part)
        for inner in atom_vertex_sets(sub):
            out.append({part[i] for i in inner})
    return out
