"""Parametric graph families and chain constructions.

Every family is a pure deterministic generator indexed by a natural
number t. Indices below a family's documented range yield the null
graph. Surface grids and copies-of-Z take extra data, so their ids are
tuples: ("surface_grid", handles, crosscaps) and ("copies", Z).
"""

import itertools
from dataclasses import dataclass

import networkx as nx

from .canon import canonical_form
from .errors import CapExceeded, UnknownFamily
from .graphs import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union_power,
    grid_graph,
    null_graph,
    path_graph,
    pumpkin,
    star,
)

from . import relations


def subdivide_all(g):
    """Subdivide every edge copy once; the result is simple."""
    out = Graph(g.n)
    for (u, v), m in g.edges.items():
        for _ in range(m):
            w = out.n
            out = out.add_vertex()
            out = out.add_edge(u, w)
            out = out.add_edge(w, v)
    return out


def _subdivide_if(g, keep):
    """Subdivide once each edge copy satisfying keep(u, v), judged on g."""
    chosen = [(u, v, m) for (u, v), m in g.edges.items() if keep(u, v)]
    out = g
    for u, v, m in chosen:
        out = out.delete_edge_all(u, v)
        for _ in range(m):
            w = out.n
            out = out.add_vertex()
            out = out.add_edge(u, w)
            out = out.add_edge(w, v)
    return out


def ternary_tree(t):
    """Rooted tree of t levels: root has 3 children, other internal
    vertices 2, all leaves at the deepest level."""
    if t < 1:
        return null_graph()
    g = Graph(1)
    frontier = [0]
    for level in range(1, t):
        k = 3 if level == 1 else 2
        nxt = []
        for p in frontier:
            for _ in range(k):
                c = g.n
                g = g.add_vertex()
                g = g.add_edge(p, c)
                nxt.append(c)
        frontier = nxt
    return g


def _ternary_leaves(t):
    """Leaf list of ternary_tree(t) in planted left-to-right order."""
    if t == 1:
        return [0]
    n = 1
    frontier = [0]
    order = {0: [0]}
    for level in range(1, t):
        k = 3 if level == 1 else 2
        nxt = []
        for p in frontier:
            kids = []
            for _ in range(k):
                kids.append(n)
                n += 1
            order[p] = kids
            nxt.extend(kids)
        frontier = nxt
    return frontier


def apex_ternary_tree(t):
    """Ternary tree plus an apex adjacent to every leaf."""
    if t < 1:
        return null_graph()
    g = ternary_tree(t)
    leaves = _ternary_leaves(t)
    a = g.n
    g = g.add_vertex()
    for l in leaves:
        g = g.add_edge(a, l)
    return g


def dual_apex_tree(t):
    """Planar dual of the apexed ternary tree, with one edge of each
    parallel pair subdivided once.

    With leaves l_1..l_m in planted order and the apex in the outer
    face, the faces are f_0 (outer) and f_1..f_{m-1} between
    consecutive leaf paths. A tree edge whose lower subtree spans
    leaves i..j dualizes to f_{i-1} f_{j mod m}; the apex edge at l_i
    dualizes to f_{i-1} f_{i mod m}. Each leaf contributes a parallel
    pair (its tree edge and its apex edge); the apex copy is the one
    subdivided.
    """
    if t < 2:
        return null_graph()
    tree = ternary_tree(t)
    leaves = _ternary_leaves(t)
    m = len(leaves)
    pos = {l: i + 1 for i, l in enumerate(leaves)}

    # leaf interval of each subtree, rooted at 0
    span = {}
    parent = {0: None}
    order = []
    stack = [0]
    while stack:
        v = stack.pop()
        order.append(v)
        for u in tree.neighbors(v):
            if u != parent[v]:
                parent[u] = v
                stack.append(u)
    for v in reversed(order):
        if v in pos:
            span[v] = (pos[v], pos[v])
        else:
            kids = [u for u in tree.neighbors(v) if parent.get(u) == v]
            span[v] = (min(span[u][0] for u in kids),
                       max(span[u][1] for u in kids))

    g = Graph(m)
    # tree edges; a leaf's own edge lands on the same face pair as its
    # apex edge, forming the parallel pair
    for v in order:
        if v == 0:
            continue
        i, j = span[v]
        g = g.add_edge((i - 1) % m, j % m)
    # apex edges, subdivided once
    for i in range(1, m + 1):
        w = g.n
        g = g.add_vertex()
        g = g.add_edge((i - 1) % m, w)
        g = g.add_edge(w, i % m)
    return g


def annulus_grid(t, ring_len=None):
    """t concentric cycles (default length 4t) joined by radial edges.
    Ring 0 is the inner cycle."""
    if t < 1:
        return null_graph()
    L = 4 * t if ring_len is None else ring_len
    g = Graph(t * L)
    idx = lambda i, j: i * L + j % L
    for i in range(t):
        for j in range(L):
            g = g.add_edge(idx(i, j), idx(i, j + 1))
            if i + 1 < t:
                g = g.add_edge(idx(i, j), idx(i + 1, j))
    return g


def _add_chord(g, u, v):
    if u != v and not g.has_edge(u, v):
        g = g.add_edge(u, v)
    return g


def singly_crossing_grid(t):
    """Annulus grid plus two crossing antipodal chords on the inner cycle."""
    if t < 1:
        return null_graph()
    g = annulus_grid(t)
    g = _add_chord(g, 0, 2 * t)
    g = _add_chord(g, t, 3 * t)
    return g


def shallow_vortex_grid(t):
    """Annulus grid plus a pairwise-crossing matching of size 2t on the
    inner cycle: even position 2i to position 2i + 2t + 1."""
    if t < 1:
        return null_graph()
    g = annulus_grid(t)
    for i in range(2 * t):
        g = _add_chord(g, 2 * i, (2 * i + 2 * t + 1) % (4 * t))
    return g


def torus_grid(t):
    """Annulus grid plus t parallel antipodal inner chords."""
    if t < 1:
        return null_graph()
    g = annulus_grid(t)
    for j in range(t):
        g = _add_chord(g, j, j + 2 * t)
    return g


def projective_grid(t):
    """Annulus grid plus the full antipodal inner matching."""
    if t < 1:
        return null_graph()
    g = annulus_grid(t)
    for j in range(2 * t):
        g = _add_chord(g, j, j + 2 * t)
    return g


def surface_grid(t, handles, crosscaps):
    """Annulus grid with gadget chord groups on disjoint inner arcs:
    one antipodal-style group per handle, one crossing matching per
    crosscap. The inner cycle is stretched so the arcs fit."""
    if t < 1:
        return null_graph()
    q = max(1, handles + crosscaps)
    L = 4 * t * q
    g = annulus_grid(t, ring_len=L)
    arc = 0
    for _ in range(handles):
        a = 4 * t * arc
        for j in range(t):
            g = _add_chord(g, a + j, a + j + 2 * t)
        arc += 1
    for _ in range(crosscaps):
        a = 4 * t * arc
        for j in range(2 * t):
            g = _add_chord(g, a + j, a + j + 2 * t)
        arc += 1
    return g


def ladder(t):
    if t < 1:
        return null_graph()
    g = Graph(2 * t)
    for i in range(t):
        g = g.add_edge(2 * i, 2 * i + 1)
        if i + 1 < t:
            g = g.add_edge(2 * i, 2 * i + 2)
            g = g.add_edge(2 * i + 1, 2 * i + 3)
    return g


def wall(t):
    """Brick wall: t x 2t grid rows joined by alternating vertical
    edges, degree-1 fringe removed."""
    if t < 1:
        return null_graph()
    cols = 2 * t
    g = Graph(t * cols)
    idx = lambda i, j: i * cols + j
    for i in range(t):
        for j in range(cols):
            if j + 1 < cols:
                g = g.add_edge(idx(i, j), idx(i, j + 1))
            if i + 1 < t and (i + j) % 2 == 0:
                g = g.add_edge(idx(i, j), idx(i + 1, j))
    while g.n and min(g.degrees()) <= 1:
        keep = [v for v in range(g.n) if g.degree(v) > 1]
        g = g.induced(keep)
    return g


def fan(t):
    """Path on t vertices plus a dominating hub."""
    if t < 1:
        return null_graph()
    g = path_graph(t)
    h = g.n
    g = g.add_vertex()
    for v in range(t):
        g = g.add_edge(h, v)
    return g


def subdivided_fan(t):
    if t < 1:
        return null_graph()
    g = fan(t)
    deg = g.degrees()
    return _subdivide_if(g, lambda u, v: deg[u] == 3 and deg[v] == 3)


def doubly_subdivided_fan(t):
    if t < 1:
        return null_graph()
    g = subdivided_fan(t)
    deg = g.degrees()
    return _subdivide_if(g, lambda u, v: deg[u] >= 3 and deg[v] >= 3)


def subdivided_wall(t):
    if t < 1:
        return null_graph()
    g = wall(t)
    deg = g.degrees()
    return _subdivide_if(g, lambda u, v: deg[u] == 3 and deg[v] == 3)


def double_edge_star(t):
    if t < 1:
        return null_graph()
    g = Graph(t + 1)
    for v in range(1, t + 1):
        g = g.add_edge(0, v, 2)
    return g


def istar(t):
    if t < 1:
        return null_graph()
    g = Graph(t + 1)
    for v in range(1, t + 1):
        g = g.add_edge(0, v, t)
    return g


def subdivided_istar(t):
    if t < 1:
        return null_graph()
    return subdivide_all(istar(t))


def multipath_subdivided(t):
    """Path on t+1 vertices with edge multiplicity t, every copy
    subdivided once."""
    if t < 1:
        return null_graph()
    g = Graph(t + 1)
    for v in range(t):
        g = g.add_edge(v, v + 1, t)
    return subdivide_all(g)


def comparability_grid(t):
    """Vertices [t]^2, edges between distinct coordinatewise-comparable
    pairs."""
    if t < 1:
        return null_graph()
    g = Graph(t * t)
    cells = [(i, j) for i in range(t) for j in range(t)]
    for a in range(len(cells)):
        for b in range(a + 1, len(cells)):
            (i, j), (i2, j2) = cells[a], cells[b]
            if (i <= i2 and j <= j2) or (i2 <= i and j2 <= j):
                g = g.add_edge(a, b)
    return g


def subdivided_clique(t):
    if t < 1:
        return null_graph()
    return subdivide_all(complete_graph(t))


def caterpillar(t):
    """Spine path with one pendant leaf per spine vertex."""
    if t < 1:
        return null_graph()
    g = path_graph(t)
    for v in range(t):
        w = g.n
        g = g.add_vertex()
        g = g.add_edge(v, w)
    return g


@dataclass(frozen=True)
class RootedGraph2:
    """A connected graph with an ordered pair of roots (possibly equal)."""
    graph: Graph
    v: int
    u: int


def z_chain(zr, t):
    """t disjoint copies of zr.graph, copy i's u joined to copy i+1's v."""
    if t < 1:
        return null_graph()
    base = zr.graph
    g = disjoint_union_power(t, base)
    k = base.n
    for i in range(t - 1):
        g = g.add_edge(i * k + zr.u, (i + 1) * k + zr.v)
    return g


def triangle_chain_1(t):
    return z_chain(RootedGraph2(complete_graph(3), 0, 1), t)


def triangle_chain_2(t):
    return z_chain(RootedGraph2(complete_graph(3), 0, 0), t)


def k5_chain_1(t):
    return z_chain(RootedGraph2(complete_graph(5), 0, 1), t)


def k5_chain_2(t):
    return z_chain(RootedGraph2(complete_graph(5), 0, 0), t)


def k33_chain_1(t):
    # roots in the same part
    return z_chain(RootedGraph2(complete_bipartite(3, 3), 0, 1), t)


def k33_chain_2(t):
    # roots in different parts
    return z_chain(RootedGraph2(complete_bipartite(3, 3), 0, 3), t)


def k33_chain_3(t):
    # equal roots
    return z_chain(RootedGraph2(complete_bipartite(3, 3), 0, 0), t)


def rooted_variants(z):
    """One 2-rooted version of z per root-respecting isomorphism class."""
    out = []
    seen = set()
    for v in range(z.n):
        for u in range(z.n):
            colors = [0] * z.n
            if v == u:
                colors[v] = 3
            else:
                colors[v] = 1
                colors[u] = 2
            code = canonical_form(z, colors)
            if code not in seen:
                seen.add(code)
                out.append(RootedGraph2(z, v, u))
    return out


def _connectivizations_one(z, cap=7):
    """Edge-minimal connected supergraphs of z: add one spanning tree
    over the components, attachment points free."""
    comps = z.components()
    c = len(comps)
    if c <= 1:
        return [z]
    if c > cap:
        raise CapExceeded(f"{c} components exceeds connectivization cap {cap}")
    out = {}
    if c == 2:
        quotient_trees = [nx.Graph([(0, 1)])]
    else:
        quotient_trees = [
            nx.from_prufer_sequence(list(seq))
            for seq in itertools.product(range(c), repeat=c - 2)
        ]
    for qt in quotient_trees:
        qedges = sorted(tuple(sorted(e)) for e in qt.edges())
        choices = [
            itertools.product(sorted(comps[a]), sorted(comps[b]))
            for a, b in qedges
        ]
        for pick in itertools.product(*choices):
            g = z
            ok = True
            for u, v in pick:
                if g.has_edge(u, v):
                    ok = False
                    break
                g = g.add_edge(u, v)
            if ok:
                out.setdefault(canonical_form(g), g)
    return list(out.values())


def connectivization(zs):
    """Minor-minimal elements of the union of per-graph edge-minimal
    connected supergraphs."""
    pool = {}
    for z in zs:
        for g in _connectivizations_one(z):
            pool.setdefault(canonical_form(g), g)
    gs = list(pool.values())
    out = []
    for i, g in enumerate(gs):
        minimal = True
        for j, h in enumerate(gs):
            if i != j and relations.contains(relations.MINOR, h, g):
                if h.n == g.n and h.m == g.m:
                    # isomorphic duplicates were already merged
                    continue
                minimal = False
                break
        if minimal:
            out.append(g)
    return out


_REGISTRY = {
    "path": (path_graph, 1),
    "ternary_tree": (ternary_tree, 1),
    "grid": (grid_graph, 1),
    "annulus_grid": (annulus_grid, 1),
    "clique": (complete_graph, 0),
    "clique_grid": (complete_graph, 0),
    "singly_crossing_grid": (singly_crossing_grid, 1),
    "shallow_vortex_grid": (shallow_vortex_grid, 1),
    "torus_grid": (torus_grid, 1),
    "projective_grid": (projective_grid, 1),
    "apex_ternary_tree": (apex_ternary_tree, 1),
    "dual_apex_tree": (dual_apex_tree, 2),
    "ladder": (ladder, 1),
    "wall": (wall, 2),
    "subdivided_wall": (subdivided_wall, 2),
    "pumpkin": (pumpkin, 1),
    "theta_subdivided": (lambda t: complete_bipartite(2, t), 1),
    "star": (star, 0),
    "double_edge_star": (double_edge_star, 1),
    "matching": (lambda t: disjoint_union_power(t, complete_graph(2)), 1),
    "edgeless": (lambda t: Graph(t), 0),
    "null": (lambda t: null_graph(), 0),
    "istar": (istar, 1),
    "subdivided_istar": (subdivided_istar, 1),
    "multipath_subdivided": (multipath_subdivided, 1),
    "fan": (fan, 1),
    # below 4 the hub degree is 3 and the subdivision pattern differs,
    # breaking monotonicity, so the range starts at 4
    "subdivided_fan": (subdivided_fan, 4),
    "doubly_subdivided_fan": (doubly_subdivided_fan, 4),
    "comparability_grid": (comparability_grid, 1),
    "subdivided_clique": (subdivided_clique, 1),
    "caterpillar": (caterpillar, 1),
    "triangle_chain_1": (triangle_chain_1, 1),
    "triangle_chain_2": (triangle_chain_2, 1),
    "k5_chain_1": (k5_chain_1, 1),
    "k5_chain_2": (k5_chain_2, 1),
    "k33_chain_1": (k33_chain_1, 1),
    "k33_chain_2": (k33_chain_2, 1),
    "k33_chain_3": (k33_chain_3, 1),
    "triangle_pack": (lambda t: disjoint_union_power(t, complete_graph(3)), 1),
    "k4_pack": (lambda t: disjoint_union_power(t, complete_graph(4)), 1),
    "k5_pack": (lambda t: disjoint_union_power(t, complete_graph(5)), 1),
    "k23_pack": (
        lambda t: disjoint_union_power(t, complete_bipartite(2, 3)), 1),
    "k33_pack": (
        lambda t: disjoint_union_power(t, complete_bipartite(3, 3)), 1),
}

FAMILY_NAMES = tuple(sorted(_REGISTRY))

# relation under which each family's member sequence is increasing
FAMILY_RELATION = {name: relations.MINOR for name in FAMILY_NAMES}
FAMILY_RELATION.update({
    "double_edge_star": relations.IMMERSION,
    "istar": relations.IMMERSION,
    "subdivided_istar": relations.TOPMINOR,
    "fan": relations.TOPMINOR,
    "multipath_subdivided": relations.TOPMINOR,
    "wall": relations.TOPMINOR,
    "pumpkin": relations.WTP,
    "theta_subdivided": relations.WTP,
    "subdivided_fan": relations.WTP,
    "doubly_subdivided_fan": relations.WTP,
    "subdivided_wall": relations.WTP,
    "comparability_grid": relations.VERTEXMINOR,
    "subdivided_clique": relations.VERTEXMINOR,
})

_MEMBER_HARD_CAP = 4000  # vertices; generators refuse beyond this


def family_member(id, t):
    """Member t of the named family; below-range indices give K0."""
    if isinstance(id, tuple):
        if id[0] == "surface_grid":
            _, h, c = id
            return surface_grid(t, h, c)
        if id[0] == "copies":
            return disjoint_union_power(t, id[1])
        raise UnknownFamily(str(id))
    if id not in _REGISTRY:
        raise UnknownFamily(str(id))
    gen, low = _REGISTRY[id]
    if t < low:
        return null_graph()
    g = gen(t)
    if g.n > _MEMBER_HARD_CAP:
        raise CapExceeded(f"family member on {g.n} vertices exceeds hard cap")
    return g


def closure_index(id, rel, g, t_cap):
    """Smallest t <= t_cap whose family member contains g; None if no
    tested member does (not a proof of non-membership)."""
    for t in range(t_cap + 1):
        member = family_member(id, t)
        if member.n > 60:
            raise CapExceeded(
                f"family member at t={t} too large for direct containment")
        cap = max(member.n, 1)
        if relations.contains(rel, g, member, cap=cap):
            return t
    return None
