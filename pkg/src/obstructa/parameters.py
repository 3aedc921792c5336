"""Exact desk-scale parameter solvers with certificates.

Subset dynamic programs over bitmasks do the heavy lifting; every
solver that returns a certificate is paired with a validator that
recomputes the width from the defining equation.
"""

from dataclasses import dataclass
from functools import lru_cache

from . import relations
from .canon import canonical_form
from .decompose import c_blocks, clique_sum_atoms
from .errors import CapExceeded, MalformedCertificate, Undefined
from .graphs import Graph, complete_graph, disjoint_union_power, star


# ---------------------------------------------------------------- helpers

def _neighbor_masks(g):
    return [sum(1 << u for u in g.adj[v]) for v in range(g.n)]


def _weighted_cut(g, mask):
    """Total multiplicity of edges leaving the masked vertex set."""
    tot = 0
    for (u, v), m in g.edges.items():
        if ((mask >> u) & 1) != ((mask >> v) & 1):
            tot += m
    return tot


def _popcount(x):
    return bin(x).count("1")


def _check_cap(g, cap, what):
    if g.n > cap:
        raise CapExceeded(f"{what} cap is {cap} vertices, got {g.n}")


# ---------------------------------------------------------------- certificates

@dataclass(frozen=True)
class VertexOrdering:
    kind: str
    order: tuple


@dataclass(frozen=True)
class TreeDecomposition:
    bags: tuple          # tuple of frozensets
    tree_edges: tuple    # pairs of bag indices


@dataclass(frozen=True)
class EliminationForest:
    parent: tuple        # parent[v] = parent vertex, -1 for roots


@dataclass(frozen=True)
class CarvingTree:
    shape: object        # leaf = vertex int, node = (left, right)


@dataclass(frozen=True)
class RankDecomposition:
    shape: object        # leaf = vertex int, node = tuple of children
    depth_mode: bool = False  # radius-bounded multiway variant


@dataclass(frozen=True)
class TreeCutDecomposition:
    nodes: tuple         # tuple of (frozenset bag, parent node index or -1)
    slim: bool = False


@dataclass(frozen=True)
class TreePartition:
    nodes: tuple         # tuple of (frozenset bag, parent node index or -1)


@dataclass(frozen=True)
class ApexSet:
    vertices: frozenset


@dataclass(frozen=True)
class AtomList:
    graphs: tuple


# ---------------------------------------------------------------- simple

def _maxstar(g):
    if g.n <= 1:
        return 0
    s = g.underlying_simple()
    k = 0
    while k + 1 < s.n and relations.minor_model(star(k + 1), s) is not None:
        k += 1
    return k


def _degeneracy(g):
    best = 0
    h = g
    while h.n:
        degs = h.degrees()
        v = min(range(h.n), key=lambda x: (degs[x], x))
        best = max(best, degs[v])
        h = h.delete_vertex(v)
    return best


def _hadwiger(g):
    if g.n == 0:
        return 0
    s = g.underlying_simple()
    hi = s.n
    if relations.is_planar(s):
        hi = min(hi, 4)
    k = 1
    while k + 1 <= hi and relations.minor_model(complete_graph(k + 1), s) is not None:
        k += 1
    return k


def _psize(g):
    return 0 if relations.is_planar(g) else g.n


_SIMPLE = {
    "size": lambda g: g.n,
    "esize": lambda g: g.m,
    "psize": _psize,
    "maxstar": _maxstar,
    "max_degree": lambda g: g.max_degree() if g.n else 0,
    "degeneracy": _degeneracy,
    "hadwiger": _hadwiger,
}


def simple_parameter(kind, g):
    if kind not in _SIMPLE:
        raise ValueError(f"unknown simple parameter {kind!r}")
    if kind in ("maxstar", "hadwiger"):
        _check_cap(g, 12, kind)
    return _SIMPLE[kind](g)


# ---------------------------------------------------------------- layout DPs

def _layout_dp(g, cost):
    """Min over vertex orderings of the max prefix cost; cost(prefix
    mask, next vertex) is charged when the vertex is appended."""
    n = g.n
    if n == 0:
        return 0, ()
    full = (1 << n) - 1
    INF = float("inf")
    f = [INF] * (full + 1)
    choice = [-1] * (full + 1)
    f[0] = 0
    for mask in range(1, full + 1):
        best, arg = INF, -1
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            prev = mask ^ (1 << v)
            val = max(f[prev], cost(prev, v))
            if val < best:
                best, arg = val, v
        f[mask] = best
        choice[mask] = arg
    order = []
    mask = full
    while mask:
        v = choice[mask]
        order.append(v)
        mask ^= 1 << v
    order.reverse()
    return int(f[full]), tuple(order)


def _pw_cost(g):
    nbr = _neighbor_masks(g)
    full = (1 << g.n) - 1

    def cost(prev, v):
        s = prev | (1 << v)
        out = full & ~s
        c = 0
        m = s
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            if nbr[u] & out:
                c += 1
        return c

    return cost


def _cw_cost(g):
    def cost(prev, v):
        return _weighted_cut(g, prev | (1 << v))

    return cost


def _component_of(g, v, allowed_mask):
    """Bitmask of v's connected component inside allowed_mask."""
    nbr = _neighbor_masks(g)
    comp = 1 << v
    frontier = comp
    while frontier:
        nxt = 0
        m = frontier
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= nbr[u] & allowed_mask & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def _etw_cost(g):
    full = (1 << g.n) - 1

    def cost(prev, v):
        suffix = full & ~prev
        comp = _component_of(g, v, suffix)
        tot = 0
        for (a, b), m in g.edges.items():
            ina, inb = (comp >> a) & 1, (comp >> b) & 1
            pa, pb = (prev >> a) & 1, (prev >> b) & 1
            if (ina and pb) or (inb and pa):
                tot += m
        return tot

    return cost


def _max_flow_to_set(g, src, targets_mask):
    """Max number of edge-disjoint paths from src to the target set,
    by augmenting paths on integer edge capacities."""
    if targets_mask == 0 or (targets_mask >> src) & 1:
        return 0
    cap = {}
    for (u, v), m in g.edges.items():
        cap[(u, v)] = m
        cap[(v, u)] = m
    flow = 0
    while True:
        # BFS for an augmenting path
        parent = {src: None}
        queue = [src]
        hit = None
        while queue and hit is None:
            x = queue.pop(0)
            for y in g.adj[x]:
                if y not in parent and cap.get((x, y), 0) > 0:
                    parent[y] = x
                    if (targets_mask >> y) & 1:
                        hit = y
                        break
                    queue.append(y)
        if hit is None:
            return flow
        y = hit
        while parent[y] is not None:
            x = parent[y]
            cap[(x, y)] -= 1
            cap[(y, x)] = cap.get((y, x), 0) + 1
            y = x
        flow += 1


def _eadm_cost(g):
    def cost(prev, v):
        return _max_flow_to_set(g, v, prev)

    return cost


_LAYOUT = {
    "pathwidth": (_pw_cost, 14),
    "cutwidth": (_cw_cost, 14),
    "edge_treewidth": (_etw_cost, 10),
    "edge_admissibility": (_eadm_cost, 10),
}


def layout_parameter(kind, g):
    if kind not in _LAYOUT:
        raise ValueError(f"unknown layout parameter {kind!r}")
    mk, cap = _LAYOUT[kind]
    _check_cap(g, cap, kind)
    val, order = _layout_dp(g, mk(g))
    return val, VertexOrdering(kind, order)


def _ordering_cost(kind, g, order):
    """Recompute the layout cost of a concrete ordering."""
    cost = _LAYOUT[kind][0](g)
    prev = 0
    worst = 0
    for v in order:
        worst = max(worst, cost(prev, v))
        prev |= 1 << v
    return worst


# ---------------------------------------------------------------- treewidth

def _tw_q(g, nbr, smask, v):
    """Vertices outside smask+{v} reachable from v through smask."""
    seen = 1 << v
    frontier = 1 << v
    reach = 0
    full = (1 << g.n) - 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            nb = nbr[u]
            reach |= nb & ~smask & ~seen
            nxt |= nb & smask & ~seen
        seen |= nxt
        frontier = nxt
    return _popcount(reach & full & ~(1 << v))


def treewidth_exact(g):
    """Exact treewidth by the elimination subset DP, with a tree
    decomposition built from the optimal elimination order."""
    _check_cap(g, 14, "treewidth")
    g = g.underlying_simple()
    n = g.n
    if n == 0:
        return 0, TreeDecomposition((), ())
    nbr = _neighbor_masks(g)
    full = (1 << n) - 1
    INF = float("inf")
    f = [INF] * (full + 1)
    choice = [-1] * (full + 1)
    f[0] = 0
    for mask in range(1, full + 1):
        best, arg = INF, -1
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            prev = mask ^ (1 << v)
            val = max(f[prev], _tw_q(g, nbr, prev, v))
            if val < best:
                best, arg = val, v
        f[mask] = best
        choice[mask] = arg
    order = []
    mask = full
    while mask:
        v = choice[mask]
        order.append(v)
        mask ^= 1 << v
    order.reverse()
    return int(f[full]), _decomposition_from_order(g, order)


def _decomposition_from_order(g, order):
    """Bags from an elimination order: bag(v) = v + later fill-in
    neighbors; each bag hangs under the earliest such neighbor's bag."""
    n = g.n
    pos = {v: i for i, v in enumerate(order)}
    h = {v: set(g.adj[v]) for v in range(n)}
    bags = []
    edges = []
    bag_index = {}
    for i, v in enumerate(order):
        later = {u for u in h[v] if pos[u] > i}
        bags.append(frozenset({v} | later))
        bag_index[v] = i
        for a in later:
            h[a].discard(v)
            for b in later:
                if a != b:
                    h[a].add(b)
    for i, v in enumerate(order):
        later = [u for u in bags[i] if u != v]
        if later:
            nxt = min(later, key=lambda u: pos[u])
            edges.append((i, bag_index[nxt]))
    return TreeDecomposition(tuple(bags), tuple(edges))


def treewidth_by_elimination(g):
    """Independent cross-check: eliminate vertices on an explicit
    fill-in graph, memoized on canonical codes."""
    g = g.underlying_simple()
    memo = {}

    def rec(h):
        if h.n <= 1:
            return 0
        code = canonical_form(h)
        if code in memo:
            return memo[code]
        if h.m == h.n * (h.n - 1) // 2:
            memo[code] = h.n - 1
            return h.n - 1
        best = float("inf")
        for v in range(h.n):
            nb = list(h.adj[v])
            filled = h
            for i in range(len(nb)):
                for j in range(i + 1, len(nb)):
                    if not filled.has_edge(nb[i], nb[j]):
                        filled = filled.add_edge(nb[i], nb[j])
            best = min(best, max(len(nb), rec(filled.delete_vertex(v))))
        memo[code] = int(best)
        return memo[code]

    return rec(g)


# ---------------------------------------------------------------- treedepth

_TD_MEMO = {}


def _td_value(g):
    if g.n == 0:
        return 0
    code = canonical_form(g)
    if code in _TD_MEMO:
        return _TD_MEMO[code]
    comps = g.component_graphs()
    if len(comps) > 1:
        val = max(_td_value(c) for c in comps)
    elif g.n == 1:
        val = 1
    else:
        val = 1 + min(_td_value(g.delete_vertex(v)) for v in range(g.n))
    if len(_TD_MEMO) > 300000:
        _TD_MEMO.clear()
    _TD_MEMO[code] = val
    return val


def _td_forest(g, verts, parent, out):
    """Fill parent pointers of an optimal elimination forest for the
    induced subgraph on verts (labels refer to g)."""
    if not verts:
        return
    sub = g.induced(sorted(verts))
    back = sorted(verts)
    for comp in sub.components():
        comp_g_labels = [back[v] for v in sorted(comp)]
        cg = g.induced(comp_g_labels)
        target = _td_value(cg)
        if len(comp_g_labels) == 1:
            out[comp_g_labels[0]] = parent
            continue
        for v in sorted(comp):
            rest = [u for u in sorted(comp) if u != v]
            rest_g = g.induced([back[u] for u in rest])
            if 1 + _td_value(rest_g) == target or not rest:
                root = back[v]
                out[root] = parent
                _td_forest(g, set(back[u] for u in rest), root, out)
                break
        else:
            raise AssertionError("treedepth recursion lost its witness")


def treedepth_exact(g):
    # forests produce few distinct subproblems, so a larger cap is safe
    s = g.underlying_simple()
    if s.m == s.n - len(s.components()):
        _check_cap(g, 16, "treedepth")
    else:
        _check_cap(g, 12, "treedepth")
    val = _td_value(s)
    parent = [-1] * s.n
    _td_forest(s, set(range(s.n)), -1, parent)
    return val, EliminationForest(tuple(parent))


# ---------------------------------------------------------------- elim_dist

_ED_MEMO = {}


def elim_dist(g, c, oracle):
    """(c, class)-elimination distance: 0 inside the class; on a
    c-connected graph 1 + the best vertex deletion; otherwise the max
    over c-blocks."""
    if c not in (0, 1, 2):
        raise ValueError("c must be 0, 1 or 2")
    _check_cap(g, 11, "elim_dist")
    key = (canonical_form(g), c, oracle.key)
    if key in _ED_MEMO:
        return _ED_MEMO[key]
    if oracle(g):
        val = 0
    else:
        blocks = c_blocks(g, c)
        if len(blocks) > 1:
            val = max(elim_dist(b, c, oracle) for b in blocks)
        elif g.n == 0:
            # not in the class yet no vertex to delete: treat as 0-block
            val = 0
        else:
            val = 1 + min(
                elim_dist(g.delete_vertex(v), c, oracle) for v in range(g.n)
            )
    if len(_ED_MEMO) > 300000:
        _ED_MEMO.clear()
    _ED_MEMO[key] = val
    return val


# ---------------------------------------------------------------- carving

def carving_width_exact(g):
    _check_cap(g, 10, "carving width")
    if g.n < 2:
        raise Undefined("carving width needs at least 2 vertices")
    n = g.n
    cut = {}
    INF = float("inf")
    f = [INF] * (1 << n)
    split = [None] * (1 << n)
    order = sorted(range(1, 1 << n), key=_popcount)
    for mask in order:
        cut[mask] = _weighted_cut(g, mask)
        if _popcount(mask) == 1:
            f[mask] = cut[mask]
            continue
        best, arg = INF, None
        sub = (mask - 1) & mask
        while sub:
            other = mask ^ sub
            if sub < other:
                val = max(f[sub], f[other])
                if val < best:
                    best, arg = val, sub
            sub = (sub - 1) & mask
        # the cut above this subtree is counted too; it is 0 for the root
        f[mask] = max(best, cut[mask])
        split[mask] = arg

    def build(mask):
        if _popcount(mask) == 1:
            return mask.bit_length() - 1
        a = split[mask]
        return (build(a), build(mask ^ a))

    full = (1 << n) - 1
    return int(f[full]), CarvingTree(build(full))


# ---------------------------------------------------------------- tree-cut

def _tcw_solve(g, threshold):
    """Feasibility-by-width search for tree-cut style decompositions.
    An adhesion is bold when its size exceeds `threshold`."""
    n = g.n
    if n == 0:
        return 0, TreeCutDecomposition((), threshold == 1)
    comp_masks = [sum(1 << v for v in comp) for comp in g.components()]
    cut = {}

    def cut_of(mask):
        if mask not in cut:
            cut[mask] = _weighted_cut(g, mask)
        return cut[mask]

    def solve_width(W):
        """Per subset S: minimal bold-children count of a subtree
        covering exactly S with all internal constraints <= W, or None."""
        feas = {}

        def feasible(S, parent_bold):
            key = (S, parent_bold)
            if key in feas:
                return feas[key]
            feas[key] = None  # cycle guard; real value set below
            best = None
            sub = S
            # choose the root bag X as a subset of S
            while True:
                X = sub
                rest = S ^ X
                base = _popcount(X) + parent_bold
                if base <= W:
                    got = _cover(rest, S, X, W, base, feasible)
                    if got is not None:
                        best = True
                if sub == 0:
                    break
                sub = (sub - 1) & S
            feas[key] = best
            return best

        def _cover(rest, S, X, W, base, feasible):
            """Partition `rest` into parts, each a feasible child with
            adhesion <= W, keeping bag-plus-bold-children <= W."""
            if rest == 0:
                return ()
            v = (rest & -rest).bit_length() - 1
            # enumerate parts containing v
            part_bits = [u for u in range(n) if (rest >> u) & 1 and u != v]
            for pick in range(1 << len(part_bits)):
                P = 1 << v
                pb = pick
                i = 0
                while pb:
                    if pb & 1:
                        P |= 1 << part_bits[i]
                    pb >>= 1
                    i += 1
                if X == 0 and P == S:
                    continue  # degenerate chain node
                a = cut_of(P)
                if a > W:
                    continue
                bold = 1 if a > threshold else 0
                if base + bold > W:
                    continue
                if feasible(P, bold) is None:
                    continue
                tail = _cover(rest ^ P, S, X, W, base + bold, feasible)
                if tail is not None:
                    return (P,) + tail
            return None

        return feasible

    W = 0
    while True:
        feasible = solve_width(W)
        if all(feasible(cm, 0) for cm in comp_masks):
            break
        W += 1
        if W > n + g.m + 2:
            raise AssertionError("tree-cut width search failed to converge")

    # rebuild a witness decomposition at the optimal width
    nodes = []

    def emit(S, parent_bold, parent_idx):
        feasible = solve_width(W)
        sub = S
        while True:
            X = sub
            rest = S ^ X
            base = _popcount(X) + parent_bold
            if base <= W:
                parts = _cover_collect(rest, S, X, W, base, feasible)
                if parts is not None:
                    idx = len(nodes)
                    nodes.append([frozenset(
                        v for v in range(n) if (X >> v) & 1), parent_idx])
                    for P in parts:
                        emit(P, 1 if cut_of(P) > threshold else 0, idx)
                    return
            if sub == 0:
                break
            sub = (sub - 1) & S
        raise AssertionError("witness reconstruction failed")

    def _cover_collect(rest, S, X, W, base, feasible):
        if rest == 0:
            return ()
        v = (rest & -rest).bit_length() - 1
        part_bits = [u for u in range(n) if (rest >> u) & 1 and u != v]
        for pick in range(1 << len(part_bits)):
            P = 1 << v
            pb = pick
            i = 0
            while pb:
                if pb & 1:
                    P |= 1 << part_bits[i]
                pb >>= 1
                i += 1
            if X == 0 and P == S:
                continue
            a = cut_of(P)
            if a > W:
                continue
            bold = 1 if a > threshold else 0
            if base + bold > W:
                continue
            if feasible(P, bold) is None:
                continue
            tail = _cover_collect(rest ^ P, S, X, W, base + bold, feasible)
            if tail is not None:
                return (P,) + tail
        return None

    for cm in comp_masks:
        emit(cm, 0, -1)
    cert = TreeCutDecomposition(
        tuple((bag, par) for bag, par in nodes), threshold == 1)
    return W, cert


def tree_cut_width_exact(g, slim=False):
    _check_cap(g, 8, "tree-cut width")
    return _tcw_solve(g, 1 if slim else 2)


# ---------------------------------------------------------------- wn

def wn_exact(g):
    """Minimum k admitting a tree-cut decomposition with adhesion <= k
    whose torsos have at most k vertices of degree > k."""
    _check_cap(g, 7, "wn")
    n = g.n
    if n == 0:
        return 0
    comp_masks = [sum(1 << v for v in comp) for comp in g.components()]
    degs = g.degrees()

    def feasible_k(k):
        high_mask = sum(1 << v for v in range(n) if degs[v] > k)
        memo = {}

        def feas(S):
            if S in memo:
                return memo[S]
            memo[S] = False
            sub = S
            while True:
                X = sub
                if _popcount(X & high_mask) <= k:
                    ok = _split(S ^ X, S, X)
                    if ok:
                        memo[S] = True
                        return True
                if sub == 0:
                    break
                sub = (sub - 1) & S
            return memo[S]

        def _split(rest, S, X):
            if rest == 0:
                return True
            v = (rest & -rest).bit_length() - 1
            part_bits = [u for u in range(n) if (rest >> u) & 1 and u != v]
            for pick in range(1 << len(part_bits)):
                P = 1 << v
                pb = pick
                i = 0
                while pb:
                    if pb & 1:
                        P |= 1 << part_bits[i]
                    pb >>= 1
                    i += 1
                if X == 0 and P == S:
                    continue
                if _weighted_cut(g, P) > k:
                    continue
                if not feas(P):
                    continue
                if _split(rest ^ P, S, X):
                    return True
            return False

        return all(feas(cm) for cm in comp_masks)

    k = 0
    while not feasible_k(k):
        k += 1
    return k


# ---------------------------------------------------------------- rank family

def _cutrank_fn(g):
    """cutrank(mask) = GF(2) rank of the adjacency rows of mask
    restricted to the complementary columns."""
    n = g.n
    nbr = _neighbor_masks(g.underlying_simple())
    full = (1 << n) - 1

    @lru_cache(maxsize=None)
    def cutrank(mask):
        cols = full & ~mask
        rows = []
        m = mask
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            r = nbr[v] & cols
            if r:
                rows.append(r)
        rank = 0
        for i in range(len(rows)):
            row = rows[i]
            if row == 0:
                continue
            rank += 1
            pivot = row & -row
            for j in range(i + 1, len(rows)):
                if rows[j] & pivot:
                    rows[j] ^= row
        return rank

    return cutrank


def _branch_dp(g, cutrank):
    n = g.n
    INF = float("inf")
    f = [INF] * (1 << n)
    split = [None] * (1 << n)
    for mask in sorted(range(1, 1 << n), key=_popcount):
        if _popcount(mask) == 1:
            f[mask] = cutrank(mask)
            continue
        best, arg = INF, None
        sub = (mask - 1) & mask
        while sub:
            other = mask ^ sub
            if sub < other:
                val = max(f[sub], f[other])
                if val < best:
                    best, arg = val, sub
            sub = (sub - 1) & mask
        full = (1 << n) - 1
        f[mask] = best if mask == full else max(best, cutrank(mask))
        split[mask] = arg
    return f, split


def rank_parameter(kind, g):
    if not g.simple:
        raise ValueError("rank parameters are defined on simple graphs")
    if kind in ("rankwidth", "linear_rankwidth"):
        _check_cap(g, 9, kind)
    elif kind == "rankdepth":
        _check_cap(g, 7, kind)
    else:
        raise ValueError(f"unknown rank parameter {kind!r}")
    n = g.n
    if kind == "rankdepth":
        return _rankdepth(g)
    if n == 0:
        return 0, RankDecomposition(None)
    cutrank = _cutrank_fn(g)
    if kind == "linear_rankwidth":
        val, order = _layout_dp(
            g, lambda prev, v: cutrank(prev | (1 << v)))
        return val, VertexOrdering("linear_rankwidth", order)
    if n == 1:
        return 0, RankDecomposition(0)
    f, split = _branch_dp(g, cutrank)

    def build(mask):
        if _popcount(mask) == 1:
            return mask.bit_length() - 1
        a = split[mask]
        return (build(a), build(mask ^ a))

    full = (1 << n) - 1
    return int(f[full]), RankDecomposition(build(full))


def rankwidth_by_carving_enumeration(g):
    """Naive oracle: minimize max cut-rank over all carving-style
    binary merge trees, enumerated without DP."""
    if not g.simple:
        raise ValueError("rankwidth is defined on simple graphs")
    _check_cap(g, 7, "rankwidth enumeration")
    n = g.n
    if n <= 1:
        return 0
    cutrank = _cutrank_fn(g)

    def rec(masks):
        """masks: current forest roots; merge until one tree."""
        if len(masks) == 1:
            return 0
        best = float("inf")
        for i in range(len(masks)):
            for j in range(i + 1, len(masks)):
                merged = masks[i] | masks[j]
                rest = [masks[x] for x in range(len(masks))
                        if x != i and x != j] + [merged]
                cost = cutrank(merged) if len(masks) > 2 else 0
                best = min(best, max(cost, rec(rest)))
        return best

    leaves = [1 << v for v in range(n)]
    base = max(cutrank(1 << v) for v in range(n))
    return int(max(base, rec(leaves)))


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]
        yield [[first]] + part


def _rankdepth(g):
    """Smallest k with a leaf-labeled tree of radius <= k whose every
    internal vertex has width <= k, width being the max cut-rank over
    unions of its incident branches."""
    n = g.n
    if n <= 2:
        return 0, RankDecomposition(None, True)
    cutrank = _cutrank_fn(g)
    verts = list(range(n))

    def width_ok(parts_masks, k):
        r = len(parts_masks)
        for I in range(1, (1 << r) - 1):
            side = 0
            for i in range(r):
                if (I >> i) & 1:
                    side |= parts_masks[i]
            if cutrank(side) > k:
                return False
        return True

    def grow(members, depth, k):
        """Shape for `members` hanging below one parent edge, or None.
        The upward branch holds every other leaf."""
        if len(members) == 1:
            return members[0]
        if depth == 0:
            return None
        up = ((1 << n) - 1) ^ sum(1 << v for v in members)
        for part in _set_partitions(members):
            if len(part) == 1:
                continue  # a chain node only wastes depth
            masks = [sum(1 << v for v in blk) for blk in part]
            if not width_ok(masks + [up], k):
                continue
            shapes = []
            for blk in part:
                s = grow(blk, depth - 1, k)
                if s is None:
                    break
                shapes.append(s)
            else:
                return tuple(shapes)
        return None

    for k in range(1, n + 1):
        for part in _set_partitions(verts):
            if len(part) == 1:
                continue
            masks = [sum(1 << v for v in blk) for blk in part]
            if not width_ok(masks, k):
                continue
            shapes = []
            for blk in part:
                s = grow(blk, k - 1, k)
                if s is None:
                    break
                shapes.append(s)
            else:
                return k, RankDecomposition(tuple(shapes), True)
    raise AssertionError("rankdepth search failed to converge")


# ---------------------------------------------------------------- tree partition

def tree_partition_width_exact(g):
    _check_cap(g, 8, "tree-partition width")
    n = g.n
    if n == 0:
        return 0, TreePartition(())
    nbr = _neighbor_masks(g)
    comp_masks = [sum(1 << v for v in comp) for comp in g.components()]

    def border(S):
        b = 0
        m = S
        full = (1 << n) - 1
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if nbr[v] & full & ~S:
                b |= 1 << v
        return b

    def components_in(mask):
        out = []
        left = mask
        while left:
            v = (left & -left).bit_length() - 1
            comp = _component_of(g, v, mask)
            out.append(comp)
            left &= ~comp
        return out

    def solve(W):
        memo = {}

        def feas(S):
            if S in memo:
                return memo[S]
            must = border(S)
            ok = False
            extra = S ^ must
            sub = extra
            while True:
                X = must | sub
                # feas only sees connected sets, where an empty root
                # bag is a useless chain node and would not terminate
                if X and _popcount(X) <= W:
                    if all(feas(C) for C in components_in(S ^ X)):
                        ok = True
                        break
                if sub == 0:
                    break
                sub = (sub - 1) & extra
            memo[S] = ok
            return ok

        return feas

    W = 0 if n == 0 else 1
    while True:
        feas = solve(W)
        if all(feas(cm) for cm in comp_masks):
            break
        W += 1

    # witness
    nodes = []

    def emit(S, parent_idx):
        feas = solve(W)
        must = border(S)
        extra = S ^ must
        sub = extra
        while True:
            X = must | sub
            if X and _popcount(X) <= W:
                comps = components_in(S ^ X)
                if all(feas(C) for C in comps):
                    idx = len(nodes)
                    nodes.append((frozenset(
                        v for v in range(n) if (X >> v) & 1), parent_idx))
                    for C in comps:
                        emit(C, idx)
                    return
            if sub == 0:
                break
            sub = (sub - 1) & extra
        raise AssertionError("tree-partition witness reconstruction failed")

    for cm in comp_masks:
        emit(cm, -1)
    return W, TreePartition(tuple(nodes))


# ---------------------------------------------------------------- aggregates

def biconnected_pathwidth(g):
    """Max over blocks of the block's pathwidth; bridge and isolated
    blocks contribute 0."""
    _check_cap(g, 12, "biconnected pathwidth")
    best = 0
    for b in c_blocks(g, 2):
        if b.n <= 2:
            continue
        val, _ = layout_parameter("pathwidth", b)
        best = max(best, val)
    return best


def sc_treewidth(g):
    if not g.simple:
        raise ValueError("sc-treewidth is defined on simple graphs")
    _check_cap(g, 10, "sc-treewidth")
    best = 0
    for atom in clique_sum_atoms(g):
        best = max(best, _psize(atom))
    return best


def barrier_number(g, obsset):
    """Largest k with k disjoint copies of some obstruction as a minor."""
    best = 0
    for z in obsset:
        if z.n == 0:
            continue
        k = 0
        while (k + 1) * z.n <= g.n and relations.minor_model(
                disjoint_union_power(k + 1, z), g) is not None:
            k += 1
        best = max(best, k)
    return best


# ---------------------------------------------------------------- validation

def _validate_tree_decomposition(cert, g, claimed):
    g = g.underlying_simple()
    bags = [set(b) for b in cert.bags]
    if g.n == 0:
        return claimed >= 0 and not bags
    for b in bags:
        if any(v < 0 or v >= g.n for v in b):
            raise MalformedCertificate("bag vertex out of range")
    adj = {i: set() for i in range(len(bags))}
    for i, j in cert.tree_edges:
        adj[i].add(j)
        adj[j].add(i)
    # acyclic and consistent occurrence sets
    if len(cert.tree_edges) >= len(bags) and bags:
        raise MalformedCertificate("decomposition tree has a cycle")
    cover = set().union(*bags) if bags else set()
    if cover != set(range(g.n)):
        return False
    for (u, v) in g.edges:
        if not any(u in b and v in b for b in bags):
            return False
    for v in range(g.n):
        occ = [i for i, b in enumerate(bags) if v in b]
        # occurrences must induce a connected subtree
        seen = {occ[0]}
        stack = [occ[0]]
        occset = set(occ)
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if y in occset and y not in seen:
                    seen.add(y)
                    stack.append(y)
        if seen != occset:
            return False
    width = max((len(b) - 1 for b in bags), default=0)
    return width <= claimed


def _validate_vertex_ordering(cert, g, claimed):
    order = list(cert.order)
    if sorted(order) != list(range(g.n)):
        raise MalformedCertificate("ordering is not a permutation")
    if cert.kind == "linear_rankwidth":
        cutrank = _cutrank_fn(g)
        prev = 0
        worst = 0
        for v in order:
            prev |= 1 << v
            worst = max(worst, cutrank(prev) if prev != (1 << g.n) - 1 else 0)
        return worst <= claimed
    if cert.kind not in _LAYOUT:
        raise MalformedCertificate(f"unknown ordering kind {cert.kind!r}")
    return _ordering_cost(cert.kind, g, order) <= claimed


def _validate_elimination_forest(cert, g, claimed):
    g = g.underlying_simple()
    parent = list(cert.parent)
    if len(parent) != g.n:
        raise MalformedCertificate("forest size mismatch")
    depth = {}

    def depth_of(v, trail=()):
        if v in trail:
            raise MalformedCertificate("parent pointers form a cycle")
        if v not in depth:
            p = parent[v]
            depth[v] = 1 if p == -1 else 1 + depth_of(p, trail + (v,))
        return depth[v]

    for v in range(g.n):
        depth_of(v)
    # every edge must be an ancestor/descendant pair
    for (u, v) in g.edges:
        x, anc = u, set()
        while x != -1:
            anc.add(x)
            x = parent[x]
        if v not in anc:
            x, anc2 = v, set()
            while x != -1:
                anc2.add(x)
                x = parent[x]
            if u not in anc2:
                return False
    return max(depth.values(), default=0) <= claimed


def _shape_leaves(shape, binary=False):
    if isinstance(shape, int):
        return [shape]
    if binary and len(shape) != 2:
        raise MalformedCertificate("internal node violates the ternary constraint")
    out = []
    for child in shape:
        out.extend(_shape_leaves(child, binary))
    return out


def _shape_cuts(shape, out):
    if isinstance(shape, int):
        return {shape}
    a, b = shape
    la = _shape_cuts(a, out)
    lb = _shape_cuts(b, out)
    out.append(frozenset(la))
    out.append(frozenset(lb))
    return la | lb


def _validate_carving(cert, g, claimed, rank=False):
    if cert.shape is None:
        return g.n <= (2 if rank else 1)
    if rank and cert.depth_mode:
        return _validate_rankdepth(cert, g, claimed)
    leaves = _shape_leaves(cert.shape, binary=True)
    if sorted(leaves) != list(range(g.n)):
        raise MalformedCertificate("carving leaves are not the vertex set")
    cuts = []
    _shape_cuts(cert.shape, cuts)
    worst = 0
    if rank:
        cutrank = _cutrank_fn(g)
        for s in cuts:
            if 0 < len(s) < g.n:
                worst = max(worst, cutrank(sum(1 << v for v in s)))
    else:
        for s in cuts:
            if 0 < len(s) < g.n:
                worst = max(worst, _weighted_cut(g, sum(1 << v for v in s)))
    return worst <= claimed


def _validate_rankdepth(cert, g, claimed):
    """Radius-bounded multiway decomposition: every internal vertex's
    branch-union cut-ranks and the tree radius are within the claim."""
    n = g.n
    leaves = _shape_leaves(cert.shape)
    if sorted(leaves) != list(range(n)):
        raise MalformedCertificate("decomposition leaves are not the vertex set")
    cutrank = _cutrank_fn(g)
    worst_width = 0
    worst_depth = 0

    def mask_of(shape):
        return sum(1 << v for v in _shape_leaves(shape))

    def visit(shape, depth, at_root):
        nonlocal worst_width, worst_depth
        if isinstance(shape, int):
            worst_depth = max(worst_depth, depth)
            return
        masks = [mask_of(c) for c in shape]
        if not at_root:
            masks.append(((1 << n) - 1) ^ sum(masks))
        r = len(masks)
        for I in range(1, (1 << r) - 1):
            side = 0
            for i in range(r):
                if (I >> i) & 1:
                    side |= masks[i]
            worst_width = max(worst_width, cutrank(side))
        for c in shape:
            visit(c, depth + 1, False)

    visit(cert.shape, 0, True)
    return worst_width <= claimed and worst_depth <= claimed


def _tcd_structures(cert, g):
    nodes = list(cert.nodes)
    n_nodes = len(nodes)
    children = {i: [] for i in range(n_nodes)}
    for i, (bag, par) in enumerate(nodes):
        if par != -1:
            if not (0 <= par < n_nodes):
                raise MalformedCertificate("bad parent index")
            children[par].append(i)
    seen = set()
    for bag, _ in nodes:
        for v in bag:
            if v in seen or v < 0 or v >= g.n:
                raise MalformedCertificate("bags are not a near-partition")
            seen.add(v)
    if seen != set(range(g.n)):
        raise MalformedCertificate("bags do not cover the vertex set")
    under = {}

    def collect(i):
        s = set(nodes[i][0])
        for c in children[i]:
            s |= collect(c)
        under[i] = s
        return s

    for i, (bag, par) in enumerate(nodes):
        if par == -1:
            collect(i)
    return nodes, children, under


def _validate_tree_cut(cert, g, claimed):
    nodes, children, under = _tcd_structures(cert, g)
    threshold = 1 if cert.slim else 2
    worst = 0
    for i, (bag, par) in enumerate(nodes):
        bold = 0
        for c in children[i]:
            a = _weighted_cut(g, sum(1 << v for v in under[c]))
            worst = max(worst, a)
            if a > threshold:
                bold += 1
        if par != -1:
            a = _weighted_cut(g, sum(1 << v for v in under[i]))
            if a > threshold:
                bold += 1
        worst = max(worst, len(bag) + bold)
    return worst <= claimed


def _validate_tree_partition(cert, g, claimed):
    nodes, children, under = _tcd_structures(cert, g)
    where = {}
    for i, (bag, _) in enumerate(nodes):
        for v in bag:
            where[v] = i
    ok_pairs = set()
    for i, (bag, par) in enumerate(nodes):
        ok_pairs.add((i, i))
        if par != -1:
            ok_pairs.add((i, par))
            ok_pairs.add((par, i))
    for (u, v) in g.edges:
        if (where[u], where[v]) not in ok_pairs:
            return False
    return max((len(b) for b, _ in nodes), default=0) <= claimed


def validate_certificate(cert, g, claimed):
    """Structural check plus recomputation of the certified width."""
    if isinstance(cert, TreeDecomposition):
        return _validate_tree_decomposition(cert, g, claimed)
    if isinstance(cert, VertexOrdering):
        return _validate_vertex_ordering(cert, g, claimed)
    if isinstance(cert, EliminationForest):
        return _validate_elimination_forest(cert, g, claimed)
    if isinstance(cert, CarvingTree):
        return _validate_carving(cert, g, claimed, rank=False)
    if isinstance(cert, RankDecomposition):
        return _validate_carving(cert, g, claimed, rank=True)
    if isinstance(cert, TreeCutDecomposition):
        return _validate_tree_cut(cert, g, claimed)
    if isinstance(cert, TreePartition):
        return _validate_tree_partition(cert, g, claimed)
    if isinstance(cert, ApexSet):
        return len(cert.vertices) <= claimed
    if isinstance(cert, AtomList):
        return max((a.n for a in cert.graphs), default=0) <= claimed
    raise MalformedCertificate(f"unknown certificate {type(cert).__name__}")


# ---------------------------------------------------------------- registry

def _forest_oracle():
    from . import oracles
    return oracles.builtin("forest")


def _edgeless_oracle():
    from . import oracles
    return oracles.builtin("edgeless")


def _null_oracle():
    from . import oracles
    return oracles.builtin("null")


def _edp_oracle():
    from . import oracles
    from .graphs import complete_graph, star
    return oracles.exclusion_of(
        relations.MINOR, [complete_graph(3), star(3)])


def parameter_value(name, g):
    """Uniform value-only access used by the CLI and level oracles."""
    if name in _SIMPLE:
        return simple_parameter(name, g)
    if name in _LAYOUT:
        return layout_parameter(name, g)[0]
    if name == "treewidth":
        return treewidth_exact(g)[0]
    if name == "treedepth":
        return treedepth_exact(g)[0]
    if name == "vc":
        return elim_dist(g, 0, _edgeless_oracle())
    if name == "fvs":
        return elim_dist(g, 0, _forest_oracle())
    if name == "btd":
        return elim_dist(g, 2, _forest_oracle())
    if name == "edforest":
        return elim_dist(g, 1, _forest_oracle())
    if name == "edpforest":
        return elim_dist(g, 1, _edp_oracle())
    if name == "carving_width":
        return carving_width_exact(g)[0]
    if name == "tree_cut_width":
        return tree_cut_width_exact(g, slim=False)[0]
    if name == "slim_tree_cut_width":
        return tree_cut_width_exact(g, slim=True)[0]
    if name == "wn":
        return wn_exact(g)
    if name in ("rankwidth", "linear_rankwidth", "rankdepth"):
        return rank_parameter(name, g)[0]
    if name == "tree_partition_width":
        return tree_partition_width_exact(g)[0]
    if name == "bi_pathwidth":
        return biconnected_pathwidth(g)
    if name == "sc_treewidth":
        return sc_treewidth(g)
    raise ValueError(f"unknown parameter {name!r}")


# name -> (monotone relation, domain) for audits; domain "m" allows
# multigraphs, "s" is simple-only
PARAMETER_INFO = {
    "size": (relations.MINOR, "m"),
    "esize": (relations.MINOR, "m"),
    "psize": (relations.MINOR, "s"),
    "maxstar": (relations.MINOR, "s"),
    "max_degree": (relations.IMMERSION, "m"),
    "degeneracy": (relations.SUBGRAPH, "m"),
    "hadwiger": (relations.MINOR, "s"),
    "vc": (relations.MINOR, "s"),
    "fvs": (relations.MINOR, "s"),
    "treewidth": (relations.MINOR, "s"),
    "pathwidth": (relations.MINOR, "s"),
    "treedepth": (relations.MINOR, "s"),
    "btd": (relations.MINOR, "s"),
    "edforest": (relations.MINOR, "s"),
    "edpforest": (relations.MINOR, "s"),
    "bi_pathwidth": (relations.MINOR, "s"),
    "sc_treewidth": (relations.MINOR, "s"),
    "cutwidth": (relations.IMMERSION, "m"),
    "carving_width": (relations.IMMERSION, "m"),
    "tree_cut_width": (relations.IMMERSION, "m"),
    "slim_tree_cut_width": (relations.IMMERSION, "m"),
    "wn": (relations.IMMERSION, "m"),
    "edge_admissibility": (relations.IMMERSION, "m"),
    "edge_treewidth": (relations.WTP, "m"),
    "rankwidth": (relations.VERTEXMINOR, "s"),
    "linear_rankwidth": (relations.VERTEXMINOR, "s"),
    "rankdepth": (relations.VERTEXMINOR, "s"),
    "tree_partition_width": (relations.SUBGRAPH, "m"),
}
