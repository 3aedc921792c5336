"""Canonical codes for small (multi)graphs.

The code is the lexicographically least multiplicity-annotated adjacency
encoding over all vertex orderings compatible with an iterated
degree/neighborhood color refinement. Refinement colors are isomorphism
invariants, so restricting the ordering search to them is sound, and it
keeps the search tiny at desk scale.
"""
from __future__ import annotations


def _refine_colors(g, init=None):
    """Stable iterated refinement; returns an int color per vertex.

    Color integers are assigned by sorted signature each round, so they
    are isomorphism-invariant, not artifacts of the input labeling.
    `init` optionally seeds semantic vertex colors (e.g. roots).
    """
    n = g.n
    adj = g.adj
    sigs = [
        (0 if init is None else init[v], sum(adj[v].values()), len(adj[v]))
        for v in range(n)
    ]
    rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
    colors = [rank[s] for s in sigs]
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[u], m) for u, m in adj[v].items())))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _search(g, colors, want_perm):
    n = g.n
    adj = g.adj
    classes = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    class_order = [classes[c] for c in sorted(classes)]
    slots = []  # class index for each position
    for ci, cl in enumerate(class_order):
        slots.extend([ci] * len(cl))

    placed = []
    rows = []
    best_rows = None
    best_perm = None

    def dfs(pos):
        nonlocal best_rows, best_perm
        if pos == n:
            if best_rows is None or rows < best_rows:
                best_rows = list(rows)
                best_perm = list(placed)
            return
        cands = [v for v in class_order[slots[pos]] if v not in placed]
        scored = []
        for v in cands:
            row = tuple(adj[v].get(u, 0) for u in placed)
            scored.append((row, v))
        min_row = min(s[0] for s in scored)
        if best_rows is not None:
            # prefix comparison against the incumbent
            cur = rows + [min_row]
            if cur > best_rows[: len(cur)]:
                return
        for row, v in scored:
            if row != min_row:
                continue
            placed.append(v)
            rows.append(row)
            dfs(pos + 1)
            rows.pop()
            placed.pop()

    dfs(0)
    flat = [m for row in best_rows for m in row]
    code = bytes([n]) + bytes(min(m, 255) for m in flat)
    if not want_perm:
        return code, None
    # best_perm[pos] = original vertex at canonical position pos
    perm = [0] * n
    for pos, v in enumerate(best_perm):
        perm[v] = pos
    return code, perm


def canonical_form(g, colors=None):
    """Isomorphism-invariant byte code; equal codes iff isomorphic.

    Optional `colors` restricts to color-preserving isomorphisms and is
    folded into the code, so rooted graphs compare root-respectingly.
    """
    if g.n == 0:
        return b"\x00"
    if colors is None:
        code, _ = _search(g, _refine_colors(g), False)
        return code
    # positions of refined classes are fixed, so the color row is
    # the same for every optimal permutation
    code, perm = _search(g, _refine_colors(g, colors), True)
    canon_colors = [0] * g.n
    for v in range(g.n):
        canon_colors[perm[v]] = colors[v]
    return code + bytes([255]) + bytes(min(c, 255) for c in canon_colors)


def canonical_perm(g):
    """A relabeling perm (old -> new) achieving the canonical code."""
    if g.n == 0:
        return []
    _, perm = _search(g, _refine_colors(g), True)
    return perm


def canonical_graph(g):
    if g.n == 0:
        return g
    return g.relabel(canonical_perm(g))


def are_isomorphic(g, h):
    if g.n != h.n or g.m != h.m:
        return False
    return canonical_form(g) == canonical_form(h)
