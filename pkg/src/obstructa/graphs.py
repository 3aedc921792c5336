"""Undirected multigraphs with labeled vertices 0..n-1 and the edit moves
used by the containment relations.

Graphs are immutable by convention: every operation returns a new Graph.
The null graph (n=0) is a valid value. No self-loops.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NonexistentTarget, RelationDomainError


def _norm_pair(u, v):
    return (u, v) if u < v else (v, u)


class Graph:
    __slots__ = ("n", "edges", "_adj", "_hash")

    def __init__(self, n, edges=None):
        self.n = n
        ed = {}
        if edges:
            if isinstance(edges, dict):
                items = edges.items()
            else:
                items = []
                for e in edges:
                    if len(e) == 2 and isinstance(e[0], int):
                        items.append((e, 1))
                    else:
                        items.append(e)
            for (u, v), m in items:
                if u == v:
                    raise ValueError("self-loops are not allowed")
                if not (0 <= u < n and 0 <= v < n):
                    raise ValueError("edge endpoint out of range")
                if m < 1:
                    raise ValueError("multiplicity must be >= 1")
                key = _norm_pair(u, v)
                ed[key] = ed.get(key, 0) + m
        self.edges = ed
        self._adj = None
        self._hash = None

    # -- basic accessors -------------------------------------------------

    @property
    def simple(self):
        return all(m == 1 for m in self.edges.values())

    @property
    def m(self):
        """Edge count with multiplicity."""
        return sum(self.edges.values())

    def mult(self, u, v):
        return self.edges.get(_norm_pair(u, v), 0)

    def has_edge(self, u, v):
        return _norm_pair(u, v) in self.edges

    @property
    def adj(self):
        if self._adj is None:
            a = [dict() for _ in range(self.n)]
            for (u, v), m in self.edges.items():
                a[u][v] = m
                a[v][u] = m
            self._adj = a
        return self._adj

    def neighbors(self, v):
        return self.adj[v].keys()

    def degree(self, v):
        """Degree counting edge multiplicities."""
        return sum(self.adj[v].values())

    def simple_degree(self, v):
        return len(self.adj[v])

    def degrees(self):
        return [self.degree(v) for v in range(self.n)]

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.edges.items())))
        return self._hash

    def __repr__(self):
        es = sorted(self.edges.items())
        return f"Graph({self.n}, {es})"

    # -- constructions ---------------------------------------------------

    def relabel(self, perm):
        """perm[i] is the new label of vertex i; must be a bijection."""
        ed = {}
        for (u, v), m in self.edges.items():
            ed[_norm_pair(perm[u], perm[v])] = m
        return Graph(self.n, ed)

    def induced(self, vs):
        """Induced subgraph on vs, relabeled compactly preserving order."""
        vs = sorted(set(vs))
        pos = {v: i for i, v in enumerate(vs)}
        ed = {}
        for (u, v), m in self.edges.items():
            if u in pos and v in pos:
                ed[_norm_pair(pos[u], pos[v])] = m
        return Graph(len(vs), ed)

    def delete_vertex(self, v):
        if not 0 <= v < self.n:
            raise NonexistentTarget(f"no vertex {v}")
        return self.induced([u for u in range(self.n) if u != v])

    def delete_edge(self, u, v):
        """Remove one copy of the edge uv."""
        key = _norm_pair(u, v)
        if key not in self.edges:
            raise NonexistentTarget(f"no edge {key}")
        ed = dict(self.edges)
        if ed[key] == 1:
            del ed[key]
        else:
            ed[key] -= 1
        return Graph(self.n, ed)

    def delete_edge_all(self, u, v):
        key = _norm_pair(u, v)
        if key not in self.edges:
            raise NonexistentTarget(f"no edge {key}")
        ed = dict(self.edges)
        del ed[key]
        return Graph(self.n, ed)

    def add_vertex(self):
        return Graph(self.n + 1, dict(self.edges))

    def add_edge(self, u, v, m=1):
        key = _norm_pair(u, v)
        ed = dict(self.edges)
        ed[key] = ed.get(key, 0) + m
        return Graph(self.n, ed)

    def contract_edge(self, u, v, mode=None):
        """Contract the edge uv, identifying v into u.

        By default simple graphs collapse multiplicities to one and
        multigraphs keep them; mode="simple" or mode="multi" forces one
        behavior. Loops are dropped either way.
        """
        if not self.has_edge(u, v):
            raise NonexistentTarget(f"no edge {u},{v}")
        if mode is None:
            simple = self.simple
        else:
            simple = mode == "simple"
        lo = min(u, v)
        hi = max(u, v)
        ed = {}
        for (a, b), m in self.edges.items():
            a2 = lo if a == hi else a
            b2 = lo if b == hi else b
            if a2 == b2:
                continue
            key = _norm_pair(a2, b2)
            ed[key] = ed.get(key, 0) + m
        if simple:
            ed = {k: 1 for k in ed}
        g = Graph(self.n, ed)
        return g.induced([w for w in range(self.n) if w != hi])

    def subdivide_edge(self, u, v):
        """Replace one copy of uv by a path u-w-v through a new vertex w."""
        g = self.delete_edge(u, v)
        w = g.n
        return g.add_vertex().add_edge(u, w).add_edge(w, v)

    def lift(self, x, y, z):
        """Lift the pair of edges xy, yz: remove one copy of each and add
        the edge xz. Lifting a parallel pair (x == z) just removes both
        copies, since loops are suppressed."""
        if not self.has_edge(x, y) or not self.has_edge(y, z):
            raise NonexistentTarget("lift pair edges missing")
        if x == z:
            if self.mult(x, y) < 2:
                raise NonexistentTarget("parallel lift needs multiplicity 2")
            return self.delete_edge(x, y).delete_edge(x, y)
        return self.delete_edge(x, y).delete_edge(y, z).add_edge(x, z)

    def local_complement(self, v):
        """Replace the subgraph induced by N(v) with its complement."""
        if not self.simple:
            raise RelationDomainError("local complementation needs a simple graph")
        if not 0 <= v < self.n:
            raise NonexistentTarget(f"no vertex {v}")
        nb = sorted(self.adj[v])
        ed = dict(self.edges)
        for i in range(len(nb)):
            for j in range(i + 1, len(nb)):
                key = _norm_pair(nb[i], nb[j])
                if key in ed:
                    del ed[key]
                else:
                    ed[key] = 1
        return Graph(self.n, ed)

    def disjoint_union(self, other):
        ed = dict(self.edges)
        off = self.n
        for (u, v), m in other.edges.items():
            ed[(u + off, v + off)] = m
        return Graph(self.n + other.n, ed)

    def underlying_simple(self):
        return Graph(self.n, {k: 1 for k in self.edges})

    def complement(self):
        if not self.simple:
            raise RelationDomainError("complement needs a simple graph")
        ed = {}
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if (u, v) not in self.edges:
                    ed[(u, v)] = 1
        return Graph(self.n, ed)

    # -- connectivity ----------------------------------------------------

    def components(self):
        """List of vertex sets, one per connected component; K0 has none."""
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = {s}
            seen[s] = True
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        comp.add(y)
                        stack.append(y)
            out.append(comp)
        return out

    def is_connected(self):
        return len(self.components()) <= 1

    def component_graphs(self):
        return [self.induced(c) for c in self.components()]

    def max_degree(self):
        return max((self.degree(v) for v in range(self.n)), default=0)


# -- moves ---------------------------------------------------------------


@dataclass(frozen=True)
class DeleteVertex:
    v: int


@dataclass(frozen=True)
class DeleteEdge:
    u: int
    v: int


@dataclass(frozen=True)
class ContractEdge:
    u: int
    v: int


@dataclass(frozen=True)
class SubdivideEdge:
    u: int
    v: int


@dataclass(frozen=True)
class LiftPair:
    x: int
    y: int
    z: int


@dataclass(frozen=True)
class LocalComplement:
    v: int


def apply_move(g, move):
    if isinstance(move, DeleteVertex):
        return g.delete_vertex(move.v)
    if isinstance(move, DeleteEdge):
        return g.delete_edge(move.u, move.v)
    if isinstance(move, ContractEdge):
        return g.contract_edge(move.u, move.v)
    if isinstance(move, SubdivideEdge):
        return g.subdivide_edge(move.u, move.v)
    if isinstance(move, LiftPair):
        return g.lift(move.x, move.y, move.z)
    if isinstance(move, LocalComplement):
        return g.local_complement(move.v)
    raise TypeError(f"unknown move {move!r}")


# -- small builders ------------------------------------------------------


def null_graph():
    return Graph(0)

def edgeless(n):
    return Graph(n)

def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])

def cycle_graph(n):
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])

def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

def complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])

def complete_multipartite(*parts):
    n = sum(parts)
    labels = []
    for idx, p in enumerate(parts):
        labels.extend([idx] * p)
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)
                     if labels[i] != labels[j]])

def star(k):
    """K_{1,k}; k=0 gives K_1."""
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])

def pumpkin(t):
    """Two vertices joined by t parallel edges."""
    if t < 1:
        raise ValueError("pumpkin needs t >= 1")
    return Graph(2, {(0, 1): t})

def disjoint_union_power(k, z):
    """k disjoint copies of z; k=0 gives the null graph."""
    g = null_graph()
    for _ in range(k):
        g = g.disjoint_union(z)
    return g

def wheel(r):
    """Wheel on r+1 vertices: C_r plus a dominating hub."""
    g = cycle_graph(r)
    g = g.add_vertex()
    for i in range(r):
        g = g.add_edge(i, r)
    return g

def grid_graph(a, b=None):
    """a x b grid; grid_graph(k) is the k x k grid."""
    if b is None:
        b = a
    def idx(i, j):
        return i * b + j
    ed = []
    for i in range(a):
        for j in range(b):
            if j + 1 < b:
                ed.append((idx(i, j), idx(i, j + 1)))
            if i + 1 < a:
                ed.append((idx(i, j), idx(i + 1, j)))
    return Graph(a * b, ed)


def from_networkx(nxg):
    import networkx as nx

    nodes = list(nxg.nodes())
    pos = {v: i for i, v in enumerate(nodes)}
    ed = {}
    if nxg.is_multigraph():
        for u, v in nxg.edges():
            if u == v:
                continue
            key = _norm_pair(pos[u], pos[v])
            ed[key] = ed.get(key, 0) + 1
    else:
        for u, v in nxg.edges():
            if u == v:
                continue
            ed[_norm_pair(pos[u], pos[v])] = 1
    return Graph(len(nodes), ed)


def to_networkx(g):
    import networkx as nx

    if g.simple:
        out = nx.Graph()
        out.add_nodes_from(range(g.n))
        out.add_edges_from(g.edges.keys())
    else:
        out = nx.MultiGraph()
        out.add_nodes_from(range(g.n))
        for (u, v), m in g.edges.items():
            for _ in range(m):
                out.add_edge(u, v)
    return out
