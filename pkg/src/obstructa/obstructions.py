"""Enumeration of minimal excluded graphs and catalog verification.

An obstruction of a containment-closed class is a non-member all of
whose proper reductions are members.  Since vertex deletion is a
reduction move of every supported relation, deleting any vertex of an
obstruction lands inside the class; enumeration therefore grows the
class members level by level with one-vertex extensions and only has to
test minimality on extensions that fall outside the class.
"""
from __future__ import annotations

import os
import time
from dataclasses import dataclass

from .canon import canonical_form, canonical_graph
from .enumerate import extensions
from .errors import BudgetExceeded, CapExceeded, RelationDomainError
from .graphs import null_graph
from .relations import (
    IMMERSION, INDUCED, MINOR, RELATIONS, SUBGRAPH, TOPMINOR, VERTEXMINOR,
    WTP, contains, local_equivalence_orbit,
)


class Budget:
    """A wall-clock and node budget; tick() raises when either runs out."""

    def __init__(self, time_ms=None, nodes=None):
        if time_ms is None:
            env = os.environ.get("OBSTRUCTA_BUDGET_MS")
            time_ms = int(env) if env else None
        self.time_ms = time_ms
        self.nodes = nodes
        self.used = 0
        self.start = time.monotonic()

    def tick(self, partial=None):
        self.used += 1
        if self.nodes is not None and self.used > self.nodes:
            raise BudgetExceeded("node budget exhausted", partial)
        if self.time_ms is not None:
            if (time.monotonic() - self.start) * 1000 > self.time_ms:
                raise BudgetExceeded("time budget exhausted", partial)


@dataclass(frozen=True)
class ObstructionSet:
    relation: str
    graphs: tuple
    completeness: tuple  # ("complete_up_to", n) or ("partial", n)

    def codes(self):
        return tuple(canonical_form(g) for g in self.graphs)


def reduction_moves(rel, g):
    """Every graph one reduction move below g, deduplicated by
    canonical code.  Moves per relation: subgraph and induced use
    deletions; minor adds contractions; topological minor adds
    degree-two suppressions; immersion adds lifts; weak topological
    minor restricts contractions to edges whose endpoints both have
    degree two; vertex-minor deletes a vertex anywhere in the local
    equivalence orbit."""
    if rel not in RELATIONS:
        raise RelationDomainError(f"unknown relation {rel!r}")
    out = {}

    def keep(h):
        out.setdefault(canonical_form(h), h)

    if rel == VERTEXMINOR:
        for h in local_equivalence_orbit(g):
            for v in range(h.n):
                keep(h.delete_vertex(v))
        return list(out.values())

    for v in range(g.n):
        keep(g.delete_vertex(v))
    if rel != INDUCED:
        for (u, v) in g.edges:
            keep(g.delete_edge(u, v))
    if rel == MINOR:
        for (u, v) in g.edges:
            keep(g.contract_edge(u, v))
    elif rel == WTP:
        for (u, v) in g.edges:
            if g.degree(u) == 2 and g.degree(v) == 2:
                keep(g.contract_edge(u, v, mode="multi"))
    elif rel == TOPMINOR:
        for v in range(g.n):
            if g.degree(v) == 2 and len(g.adj[v]) == 2:
                a, b = sorted(g.adj[v])
                keep(g.lift(a, v, b).delete_vertex(v))
    elif rel == IMMERSION:
        for y in range(g.n):
            nbrs = sorted(g.adj[y])
            for i, x in enumerate(nbrs):
                if g.mult(x, y) >= 2:
                    keep(g.lift(x, y, x))
                for z in nbrs[i + 1:]:
                    keep(g.lift(x, y, z))
    return list(out.values())


def is_obstruction(rel, oracle, g):
    """g is outside the class and every one-move reduction is inside."""
    if oracle(g):
        return False
    return all(oracle(r) for r in reduction_moves(rel, g))


def enumerate_obstructions(rel, oracle, n_max, budget=None,
                           multigraph=False, max_multiplicity=None):
    """All minimal non-members with at most n_max vertices.

    For multigraph relations the scan is bounded by max_multiplicity
    (default 4); completeness is only ever claimed up to these caps.
    On budget exhaustion the exception carries the partial set."""
    if budget is None:
        budget = Budget()
    mm = max_multiplicity if max_multiplicity else (4 if multigraph else 1)
    if not multigraph:
        mm = 1
    k0 = null_graph()
    if not oracle(k0):
        # the class is empty, so the null graph is its one obstruction
        return ObstructionSet(rel, (k0,), ("complete_up_to", n_max))
    members = [k0]
    found = {}

    def partial(n_done):
        gs = tuple(found[c] for c in sorted(found))
        return ObstructionSet(rel, gs, ("partial", n_done))

    for n in range(1, n_max + 1):
        seen = set()
        nxt = []
        for g in members:
            for h in extensions(g, mm):
                code = canonical_form(h)
                if code in seen:
                    continue
                seen.add(code)
                budget.tick(partial(n - 1))
                hc = canonical_graph(h)
                if oracle(hc):
                    nxt.append(hc)
                elif all(oracle(r) for r in reduction_moves(rel, hc)):
                    found[code] = hc
        members = nxt
    gs = tuple(found[c] for c in sorted(found))
    return ObstructionSet(rel, gs, ("complete_up_to", n_max))


def is_antichain(rel, gs):
    """No two distinct graphs in gs are comparable under rel.
    Isomorphic duplicates count as comparable."""
    reps = []
    codes = set()
    for g in gs:
        code = canonical_form(g)
        if code in codes:
            return False
        codes.add(code)
        reps.append(g)
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            if contains(rel, a, b) or contains(rel, b, a):
                return False
    return True


def verify_catalog_entry(entry, budget=None):
    """Check the claims a catalog entry makes, within budget:
    (a) each obstruction set is an antichain;
    (b) no obstruction belongs to the class it excludes;
    (c) every one-move reduction of each obstruction is in the class;
    (d) no family member contains any obstruction of its closure.
    Returns a Report with one line per check."""
    from .catalog import entry_oracle
    from .families import family_member
    from .report import Report

    if budget is None:
        budget = Budget()
    report = Report(name=entry.parameter)
    rel = entry.relation
    for pset in entry.pobs_sets:
        label = pset.label
        gs = pset.graphs
        budget.tick()
        report.add(f"{label}: antichain", is_antichain(rel, gs))
        oracle = entry_oracle(entry, pset)
        if oracle is None:
            report.add(f"{label}: exclusion", True, partial=True,
                       details="skipped: no membership oracle")
            report.add(f"{label}: minimality", True, partial=True,
                       details="skipped: no membership oracle")
            continue
        excluded = [g for g in gs if oracle(g)]
        report.add(f"{label}: exclusion", not excluded,
                   witness=excluded[0] if excluded else None)
        bad = None
        for g in gs:
            budget.tick()
            for r in reduction_moves(rel, g):
                if not oracle(r):
                    bad = (g, r)
                    break
            if bad:
                break
        report.add(f"{label}: minimality", bad is None,
                   witness=bad[0] if bad else None)
    for fam in entry.universal_family:
        # a family member only needs to avoid the obstructions of its
        # own closure, so pair sets with families where declared
        psets = [p for p in entry.pobs_sets if p.family == fam]
        if not psets and len(entry.pobs_sets) == 1 \
                and entry.pobs_sets[0].family is None:
            psets = list(entry.pobs_sets)
        bad = None
        for t in range(1, entry.t_cap + 1):
            member = family_member(fam, t)
            if member.n > 30:
                break
            budget.tick()
            for pset in psets:
                for g in pset.graphs:
                    try:
                        hit = contains(rel, g, member)
                    except CapExceeded:
                        continue
                    if hit:
                        bad = (t, g)
                        break
                if bad:
                    break
            if bad:
                break
        report.add(f"family {fam}: obstructions defeat members", bad is None,
                   witness=bad[1] if bad else None)
    return report
