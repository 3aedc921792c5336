"""Exact deciders for the seven containment quasi-orderings.

All deciders are deterministic exhaustive searches with pruning, suitable
for desk-scale graphs only. Caps are defaults and can be raised by
callers that know what they are doing (e.g. family members on the right
side); exceeding a cap raises, never silently answers.
"""
from __future__ import annotations

from .canon import canonical_form
from .errors import CapExceeded, OrbitCapExceeded, RelationDomainError
from .graphs import Graph, complete_graph, complete_bipartite

SUBGRAPH = "subgraph"
INDUCED = "induced"
MINOR = "minor"
TOPMINOR = "topminor"
IMMERSION = "immersion"
VERTEXMINOR = "vertexminor"
WTP = "wtp"

RELATIONS = (SUBGRAPH, INDUCED, MINOR, TOPMINOR, IMMERSION, VERTEXMINOR, WTP)

DEFAULT_CAPS = {
    SUBGRAPH: 12,
    INDUCED: 12,
    MINOR: 12,
    TOPMINOR: 12,
    IMMERSION: 10,
    VERTEXMINOR: 8,
    WTP: 8,
}

ORBIT_CAP = 2 * 10**6


# -- injective-map relations ---------------------------------------------


def _map_search(h, g, induced):
    """Injective vertex map respecting edge multiplicities."""
    if h.n > g.n or h.m > g.m:
        return None
    order = sorted(range(h.n), key=lambda x: -h.degree(x))
    image = {}
    used = set()

    def ok(x, v):
        if g.degree(v) < h.degree(x):
            return False
        for y, mx in h.adj[x].items():
            if y in image:
                mg = g.mult(v, image[y])
                if induced:
                    if mg != mx:
                        return False
                elif mg < mx:
                    return False
        if induced:
            for y in image:
                if y not in h.adj[x] and g.mult(v, image[y]) != 0:
                    return False
        return True

    def rec(i):
        if i == len(order):
            return True
        x = order[i]
        for v in range(g.n):
            if v in used or not ok(x, v):
                continue
            image[x] = v
            used.add(v)
            if rec(i + 1):
                return True
            used.discard(v)
            del image[x]
        return False

    return dict(image) if rec(0) else None


# -- minors --------------------------------------------------------------


def _connected_subsets(g, free, max_size):
    """Connected subsets of `free` (a set), smallest-first per root."""
    free_sorted = sorted(free)
    for r in free_sorted:
        # subsets whose minimum element is r
        allowed = {v for v in free if v > r}

        def grow(s, frontier, banned):
            yield set(s)
            if len(s) >= max_size:
                return
            cands = sorted((frontier - banned))
            for i, v in enumerate(cands):
                s.add(v)
                newf = frontier | {u for u in g.adj[v] if u in allowed}
                yield from grow(s, newf - s, banned | set(cands[: i + 1]))
                s.remove(v)

        start_frontier = {u for u in g.adj[r] if u in allowed}
        yield from grow({r}, start_frontier, set())


def _edgecount(g, a, b):
    total = 0
    for u in a:
        for v, m in g.adj[u].items():
            if v in b:
                total += m
    return total


def minor_model(h, g):
    """Branch-set model of h in g, or None.

    Works for multigraphs: an h-edge of multiplicity m needs at least m
    g-edges (with multiplicity) between the two branch sets.
    """
    if h.n == 0:
        return {}
    if h.n > g.n or h.m > g.m:
        return None
    order = sorted(range(h.n), key=lambda x: (-h.degree(x), x))
    branch = {}
    used = set()

    def rec(i):
        if i == len(order):
            return True
        x = order[i]
        free = set(range(g.n)) - used
        budget = len(free) - (len(order) - i - 1)
        if budget < 1:
            return False
        assigned_nb = [(y, m) for y, m in h.adj[x].items() if y in branch]
        for s in _connected_subsets(g, free, budget):
            if any(_edgecount(g, s, branch[y]) < m for y, m in assigned_nb):
                continue
            branch[x] = s
            used.update(s)
            if rec(i + 1):
                return True
            used.difference_update(s)
            del branch[x]
        return False

    return dict(branch) if rec(0) else None


def _layout_boundaries(g, order):
    """For each prefix of order, the sorted tuple of prefix vertices
    that still have a neighbor outside the prefix."""
    pos = {v: i for i, v in enumerate(order)}
    out = []
    for i in range(len(order)):
        b = tuple(
            v for v in order[: i + 1]
            if any(pos[u] > i for u in g.adj[v])
        )
        out.append(tuple(sorted(b)))
    return out


def layout_for_host(g, max_boundary=7):
    """A vertex order of g whose running boundary stays small, or None.
    Tries the native order plus BFS orders from a few roots."""
    if g.n == 0:
        return []
    candidates = [list(range(g.n))]
    for root in (0, g.n - 1):
        seen = [root]
        mark = {root}
        i = 0
        while i < len(seen):
            for u in sorted(g.adj[seen[i]]):
                if u not in mark:
                    mark.add(u)
                    seen.append(u)
            i += 1
        for v in range(g.n):
            if v not in mark:
                seen.append(v)
                mark.add(v)
        candidates.append(seen)
    # depth-first order: good for tree-like hosts
    dfs = []
    mark = set()
    for root in range(g.n):
        if root in mark:
            continue
        stack = [root]
        mark.add(root)
        while stack:
            v = stack.pop()
            dfs.append(v)
            for u in sorted(g.adj[v], reverse=True):
                if u not in mark:
                    mark.add(u)
                    stack.append(u)
    candidates.append(dfs)
    best = None
    for order in candidates:
        width = max(
            (len(b) for b in _layout_boundaries(g, order)), default=0
        )
        if best is None or width < best[0]:
            best = (width, order)
    if best and best[0] <= max_boundary:
        return best[1]
    return None


def minor_contains_by_layout(h, g, order, state_cap=2_000_000):
    """Decide h <=_minor g by dynamic programming over a vertex layout
    of the host g with small running boundary.

    A state after processing a prefix records, for each boundary vertex,
    the pattern vertex whose branch set it belongs to (or deletion), the
    fragment structure of partially built branch sets, each pattern
    vertex's lifecycle (unstarted / open / closed), and how much of each
    pattern edge's multiplicity is already realized.  A branch-set
    fragment that loses its last boundary vertex can never grow again,
    which forces the closure rules below.
    """
    if h.n == 0:
        return True
    if h.n > g.n or h.m > g.m:
        return False
    pos = {v: i for i, v in enumerate(order)}
    boundaries = _layout_boundaries(g, order)
    edges = sorted(h.edges.items())
    eidx = {e: j for j, (e, _) in enumerate(edges)}
    need = tuple(m for _, m in edges)
    at_vertex = [[] for _ in range(h.n)]
    for (x, y), j in [(e, eidx[e]) for e, _ in edges]:
        at_vertex[x].append(j)
        at_vertex[y].append(j)
    UNSTARTED, OPEN, CLOSED = 0, 1, 2

    # state: (assign, frag, status, real); assign and frag align with the
    # sorted boundary tuple, -1 meaning a deleted host vertex
    states = {((), (), (UNSTARTED,) * h.n, (0,) * len(edges))}
    prev_b = ()
    goal_status = (CLOSED,) * h.n
    for i, v in enumerate(order):
        new_b = boundaries[i]
        nbrs = [(u, m) for u, m in sorted(g.adj[v].items()) if pos[u] < i]
        remaining = len(order) - i - 1
        nxt = set()
        for assign, frag, status, real in states:
            slot = {u: k for k, u in enumerate(prev_b)}
            choices = [-1] + [x for x in range(h.n) if status[x] != CLOSED]
            for x in choices:
                if x >= 0:
                    merged = set()
                    real2 = list(real)
                    for u, m in nbrs:
                        y = assign[slot[u]]
                        if y < 0:
                            continue
                        if y == x:
                            merged.add(frag[slot[u]])
                        else:
                            e = (min(x, y), max(x, y))
                            j = eidx.get(e)
                            if j is not None:
                                real2[j] = min(need[j], real2[j] + m)
                    status2 = list(status)
                    status2[x] = OPEN
                else:
                    merged = set()
                    real2 = list(real)
                    status2 = list(status)
                # place v, then drop everything that left the boundary
                ext = list(prev_b) + ([] if v in prev_b else [v])
                ext.sort()
                fresh = max(frag, default=-1) + 1
                a2, f2 = {}, {}
                for u in ext:
                    if u == v:
                        a2[u] = x
                        f2[u] = fresh if x >= 0 else -1
                    else:
                        a2[u] = assign[slot[u]]
                        fu = frag[slot[u]]
                        f2[u] = fresh if (x >= 0 and a2[u] == x
                                          and fu in merged) else fu
                departing = {}
                for u in ext:
                    if u not in new_b and a2[u] >= 0:
                        departing.setdefault(a2[u], set()).add(f2[u])
                ok = True
                for y, frags in departing.items():
                    survive = {f2[w] for w in new_b if a2.get(w) == y}
                    dying = frags - survive
                    if not dying:
                        continue
                    # a dying fragment ends the branch set: it must be the
                    # only fragment, and all of y's edges realized by now
                    if survive or len(frags) > 1:
                        ok = False
                        break
                    status2[y] = CLOSED
                    if any(real2[j] < need[j] for j in at_vertex[y]):
                        ok = False
                        break
                if not ok:
                    continue
                unstarted = sum(1 for s in status2 if s == UNSTARTED)
                if unstarted > remaining:
                    continue
                status3 = tuple(status2)
                real3 = tuple(real2)
                if status3 == goal_status and real3 == need:
                    return True  # leftovers of the host are deletable
                assign3 = tuple(a2[u] for u in new_b)
                raw = tuple(f2[u] for u in new_b)
                relab, f3 = {}, []
                for fid in raw:
                    if fid < 0:
                        f3.append(-1)
                    else:
                        relab.setdefault(fid, len(relab))
                        f3.append(relab[fid])
                nxt.add((assign3, tuple(f3), status3, real3))
        if len(nxt) > state_cap:
            raise CapExceeded("layout minor DP state cap hit")
        states = nxt
        prev_b = new_b
        if not states:
            return False
    return False


def validate_minor_model(h, g, model):
    if set(model) != set(range(h.n)):
        return False
    allv = set()
    for s in model.values():
        if not s or (s & allv):
            return False
        if len(g.induced(s).components()) != 1:
            return False
        allv |= s
    if not allv <= set(range(g.n)):
        return False
    for (x, y), m in h.edges.items():
        if _edgecount(g, model[x], model[y]) < m:
            return False
    return True


def _bfs_minor_oracle(h, g):
    """Independent check: explore all graphs reachable from g by
    delete/contract moves; h is a minor iff its code shows up."""
    target = canonical_form(h)
    seen = set()
    frontier = [g]
    while frontier:
        nxt = []
        for cur in frontier:
            code = canonical_form(cur)
            if code in seen:
                continue
            seen.add(code)
            if code == target:
                return True
            if cur.n < h.n or cur.m < h.m:
                continue
            children = []
            for v in range(cur.n):
                children.append(cur.delete_vertex(v))
            for (u, v) in cur.edges:
                children.append(cur.delete_edge(u, v))
                children.append(cur.contract_edge(u, v, mode="multi"))
            nxt.extend(children)
        frontier = nxt
    return target in seen


# -- topological minors --------------------------------------------------


def _route_disjoint_paths(g, demands, vertex_disjoint, reserved):
    """Backtracking router.

    demands: list of (a, b) endpoint pairs, one per required path.
    vertex_disjoint: internal vertices pairwise disjoint and avoiding
    `reserved` (topological minor); otherwise paths are edge-disjoint in
    the multiplicity sense (immersion).
    """
    cap = dict(g.edges)
    used_internal = set()

    def paths_from(a, b, banned):
        # DFS enumeration of simple a-b paths in the residual graph
        def rec(v, path, visited):
            if v == b:
                yield list(path)
                return
            for u in sorted(g.adj[v]):
                if u in visited:
                    continue
                key = (v, u) if v < u else (u, v)
                if cap.get(key, 0) < 1:
                    continue
                if vertex_disjoint and u != b and (u in banned or u in used_internal):
                    continue
                path.append(u)
                visited.add(u)
                yield from rec(u, path, visited)
                visited.discard(u)
                path.pop()

        yield from rec(a, [a], {a})

    out = []

    def solve(i):
        if i == len(demands):
            return True
        a, b = demands[i]
        banned = reserved - {a, b}
        for path in paths_from(a, b, banned):
            keys = []
            for x, y in zip(path, path[1:]):
                keys.append((x, y) if x < y else (y, x))
            for k in keys:
                cap[k] -= 1
            internal = path[1:-1]
            if vertex_disjoint:
                used_internal.update(internal)
            out.append(path)
            if solve(i + 1):
                return True
            out.pop()
            if vertex_disjoint:
                used_internal.difference_update(internal)
            for k in keys:
                cap[k] += 1
        return False

    return out if solve(0) else None


def _branch_map_search(h, g, vertex_disjoint):
    if h.n > g.n or h.m > g.m:
        return None
    order = sorted(range(h.n), key=lambda x: (-h.degree(x), x))
    image = {}
    used = set()
    demands_template = []
    for (x, y), m in sorted(h.edges.items()):
        demands_template.extend([(x, y)] * m)

    def rec(i):
        if i == len(order):
            demands = [(image[x], image[y]) for x, y in demands_template]
            paths = _route_disjoint_paths(
                g, demands, vertex_disjoint, set(image.values())
            )
            return paths is not None
        x = order[i]
        for v in range(g.n):
            if v in used or g.degree(v) < h.degree(x):
                continue
            image[x] = v
            used.add(v)
            if rec(i + 1):
                return True
            used.discard(v)
            del image[x]
        return False

    return dict(image) if rec(0) else None


def topminor_contains(h, g):
    return _branch_map_search(h, g, True) is not None


def immersion_model(h, g):
    """Vertex map plus edge-disjoint path system, or None."""
    image = _branch_map_search(h, g, False)
    if image is None:
        return None
    demands = []
    for (x, y), m in sorted(h.edges.items()):
        demands.extend([(image[x], image[y])] * m)
    paths = _route_disjoint_paths(g, demands, False, set(image.values()))
    return {"vertex_map": image, "paths": paths}


# -- vertex-minors -------------------------------------------------------


def local_equivalence_orbit(g, cap=ORBIT_CAP, as_codes=False):
    """All graphs locally equivalent to g (BFS over complementations)."""
    if not g.simple:
        raise RelationDomainError("vertex-minor machinery needs simple graphs")
    start = canonical_form(g)
    seen = {start: g}
    frontier = [g]
    while frontier:
        nxt = []
        for cur in frontier:
            for v in range(cur.n):
                if not cur.adj[v]:
                    continue
                h = cur.local_complement(v)
                code = canonical_form(h)
                if code not in seen:
                    if len(seen) >= cap:
                        raise OrbitCapExceeded(f"orbit exceeds {cap}")
                    seen[code] = h
                    nxt.append(h)
        frontier = nxt
    return set(seen) if as_codes else set(seen.values())


_ORBIT_CODE_CACHE = {}


def _orbit_codes(h):
    key = canonical_form(h)
    if key not in _ORBIT_CODE_CACHE:
        _ORBIT_CODE_CACHE[key] = local_equivalence_orbit(h, as_codes=True)
    return _ORBIT_CODE_CACHE[key]


def _pivot(g, u, v):
    return g.local_complement(u).local_complement(v).local_complement(u)


def vertexminor_contains(h, g):
    """h is an induced subgraph of some graph locally equivalent to g.

    Implemented by the standard elimination branching: remove a vertex v
    of g as v itself, as v after complementation at v, or as v after a
    pivot on an incident edge; at equal sizes check local equivalence.
    """
    if not (h.simple and g.simple):
        raise RelationDomainError("vertex-minor needs simple graphs")
    if h.n > g.n:
        return False
    target_codes = _orbit_codes(h)
    memo = {}

    def rec(cur):
        code = canonical_form(cur)
        if cur.n == h.n:
            return code in target_codes
        if code in memo:
            return memo[code]
        memo[code] = False
        result = False
        for v in range(cur.n):
            if rec(cur.delete_vertex(v)):
                result = True
                break
            if cur.adj[v]:
                if rec(cur.local_complement(v).delete_vertex(v)):
                    result = True
                    break
                hit = False
                for w in sorted(cur.adj[v]):
                    if rec(_pivot(cur, v, w).delete_vertex(v)):
                        hit = True
                        break
                if hit:
                    result = True
                    break
        memo[code] = result
        return result

    return rec(g)


def vertexminor_contains_by_orbit(h, g, cap=ORBIT_CAP):
    """Direct form of the definition, for cross-checking."""
    for g2 in local_equivalence_orbit(g, cap):
        if _map_search(h, g2, True) is not None:
            return True
    return False


# -- weak topological minors ---------------------------------------------


def wtp_contains(h, g):
    """BFS from g over deletions plus contractions of edges whose
    endpoints both have degree exactly two (multiplicity counted)."""
    target = canonical_form(h)
    seen = set()
    frontier = [g]
    while frontier:
        nxt = []
        for cur in frontier:
            code = canonical_form(cur)
            if code in seen:
                continue
            seen.add(code)
            if code == target:
                return True
            if cur.n < h.n or cur.m < h.m:
                continue
            for v in range(cur.n):
                nxt.append(cur.delete_vertex(v))
            for (u, v) in cur.edges:
                nxt.append(cur.delete_edge(u, v))
                if cur.degree(u) == 2 and cur.degree(v) == 2:
                    nxt.append(cur.contract_edge(u, v, mode="multi"))
        frontier = nxt
    return False


# -- the umbrella decider ------------------------------------------------

_CONTAINS_MEMO = {}
_MEMO_LIMIT = 400_000


def contains(rel, h, g, cap=None):
    """Decide h <=_rel g."""
    if rel not in RELATIONS:
        raise ValueError(f"unknown relation {rel!r}")
    limit = cap if cap is not None else DEFAULT_CAPS[rel]
    if g.n > limit:
        raise CapExceeded(f"|g|={g.n} exceeds {rel} cap {limit}")
    if rel == VERTEXMINOR and not (h.simple and g.simple):
        raise RelationDomainError("VertexMinor applies to simple graphs only")
    if h.n > g.n:
        return False
    if rel != VERTEXMINOR and h.m > g.m:
        # every non-vertex-minor reduction is edge-nonincreasing
        return False
    key = None
    if g.n <= 10:
        key = (rel, canonical_form(h), canonical_form(g))
        if key in _CONTAINS_MEMO:
            return _CONTAINS_MEMO[key]
    if rel == SUBGRAPH:
        ans = _map_search(h, g, False) is not None
    elif rel == INDUCED:
        ans = _map_search(h, g, True) is not None
    elif rel == MINOR:
        if g.n > 12:
            order = layout_for_host(g)
            if order is not None:
                ans = minor_contains_by_layout(h, g, order)
            else:
                ans = minor_model(h, g) is not None
        else:
            ans = minor_model(h, g) is not None
    elif rel == TOPMINOR:
        ans = topminor_contains(h, g)
    elif rel == IMMERSION:
        # a topological minor is also an immersion; try the cheaper
        # vertex-disjoint router first, fall back to edge-disjoint
        ans = topminor_contains(h, g) or immersion_model(h, g) is not None
    elif rel == VERTEXMINOR:
        ans = vertexminor_contains(h, g)
    else:
        ans = wtp_contains(h, g)
    if key is not None and len(_CONTAINS_MEMO) < _MEMO_LIMIT:
        _CONTAINS_MEMO[key] = ans
    return ans


# -- planarity -----------------------------------------------------------

_K5 = complete_graph(5)
_K33 = complete_bipartite(3, 3)


def is_planar(g):
    """No K5 and no K33 minor. Large graphs fall back to the
    linear-time planarity test, which decides the same property."""
    gs = g.underlying_simple()
    if gs.n <= 12:
        key = canonical_form(gs)
        return _planar_small(key, gs)
    import networkx as nx
    from .graphs import to_networkx

    ok, _ = nx.check_planarity(to_networkx(gs))
    return ok


_PLANAR_MEMO = {}


def _planar_small(key, gs):
    if key not in _PLANAR_MEMO:
        _PLANAR_MEMO[key] = (
            minor_model(_K5, gs) is None and minor_model(_K33, gs) is None
        )
    return _PLANAR_MEMO[key]
