"""Family-indexed parameter values, Smyth comparisons of obstruction
sets, omnivore checks, and empirical monotonicity and dominance audits.

For a parametric family H = <H_1, H_2, ...> the value p_H(G) is the
least k such that H_k does not embed in G; a collection of families
takes the sup.  A family is an omnivore of a class when the class is
exactly the set of graphs embedding in some member.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .canon import canonical_form
from .enumerate import enumerate_graphs
from .errors import CapExceeded, Undefined
from .families import family_member
from .graphs import Graph
from .obstructions import Budget, reduction_moves
from .relations import contains
from .report import Report

MEMBER_SIZE_CAP = 1000


def p_family_value(fams, rel, g, t_cap):
    """sup over families of inf{k <= t_cap : H_k does not embed in g};
    the empty collection gives 0.  If every tested member embeds, the
    cap is too small and that is an error, not a value."""
    fams = list(fams)
    best = 0
    for fam in fams:
        val = None
        for k in range(1, t_cap + 1):
            member = family_member(fam, k)
            if member.n > MEMBER_SIZE_CAP:
                break
            if not contains(rel, member, g, cap=max(g.n, 1)):
                val = k
                break
        if val is None:
            raise CapExceeded(
                f"every tested member of {fam} embeds; raise t_cap"
            )
        best = max(best, val)
    return best


def smyth_leq(rel, x, y):
    """x <=* y: every graph of y has some graph of x below it."""
    return all(
        any(contains(rel, a, b, cap=max(b.n, 1)) for a in x) for b in y
    )


def smyth2(rel, xx, yy):
    """xx <=** yy: every set in yy has some set of xx below it under
    <=*."""
    return all(any(smyth_leq(rel, a, b) for a in xx) for b in yy)


def omnivore_check(fam_id, rel, oracle, n_max, t_cap, budget=None,
                   multigraph=False, finder=None):
    """Both inclusions of "the class is the closure of the family":
    every family member up to t_cap satisfies the oracle, and every
    class member with at most n_max vertices embeds in some family
    member with index at most t_cap.  `finder(g)` may supply a cheaper
    embedding decision for one graph against the family."""
    if budget is None:
        budget = Budget()
    report = Report(name=f"omnivore {fam_id} / {oracle.key}")
    bad = None
    for t in range(1, t_cap + 1):
        member = family_member(fam_id, t)
        if member.n > MEMBER_SIZE_CAP:
            break
        budget.tick()
        if not oracle(member):
            bad = (t, member)
            break
    report.add("members stay in the class", bad is None,
               witness=bad[1] if bad else None)
    missing = []
    for g in enumerate_graphs(n_max, multigraph=multigraph, cap=n_max):
        if not oracle(g):
            continue
        budget.tick()
        if finder is not None:
            hit = finder(g)
        else:
            hit = False
            for t in range(1, t_cap + 1):
                member = family_member(fam_id, t)
                if member.n > MEMBER_SIZE_CAP:
                    break
                if contains(rel, g, member, cap=member.n):
                    hit = True
                    break
        if not hit:
            missing.append(g)
    report.add("class members embed in the family", not missing,
               witness=missing[0] if missing else None,
               details=f"{len(missing)} missing" if missing else "")
    return report


@dataclass
class DominanceReport:
    verdict: str  # "consistent" or "counterexample"
    samples_tested: int
    envelope: dict  # value of pa -> max value of pb seen with it
    witness: object = None


@dataclass
class GraphSample:
    """Exhaustive small graphs plus family members."""
    n_max: int = 5
    families: tuple = ()  # (family_id, t_lo, t_hi)
    multigraph: bool = False

    def graphs(self):
        yield from enumerate_graphs(self.n_max, multigraph=self.multigraph,
                                    cap=self.n_max)
        for fam, lo, hi in self.families:
            for t in range(lo, hi + 1):
                yield family_member(fam, t)


def dominance_evidence(pa, pb, sample):
    """Empirical support for pa <= f(pb): across the sample, record for
    each pb value the largest pa value seen.  The claim is refuted on
    the sample only when pa is unbounded while pb stays fixed, which
    with finite data means: report the envelope and flag nothing unless
    a family shows pb constant while pa strictly grows three times."""
    from .parameters import parameter_value

    envelope = {}
    tested = 0
    growth = {}
    for g in sample.graphs():
        try:
            va = parameter_value(pa, g)
            vb = parameter_value(pb, g)
        except CapExceeded:
            continue
        tested += 1
        envelope[vb] = max(envelope.get(vb, 0), va)
        seen = growth.setdefault(vb, set())
        seen.add(va)
    verdict = "consistent"
    witness = None
    for vb, vals in growth.items():
        if len(vals) >= 4 and max(vals) >= vb + 3:
            # same pb value keeps admitting larger pa values: evidence
            # that no monotone gap function can work along this slice
            verdict = "counterexample"
            witness = (vb, sorted(vals))
    return DominanceReport(verdict, tested, envelope, witness)


def monotonicity_audit(param, rel, trials, n_max=6, seed=0,
                       multigraph=False, budget=None):
    """Random (H, G) pairs with H a few relation moves below G; checks
    p(H) <= p(G) and reports every violation."""
    from .parameters import parameter_value

    rng = random.Random(seed)
    pool = [
        g for g in enumerate_graphs(n_max, multigraph=multigraph, cap=n_max)
        if g.n >= 2
    ]
    report = Report(name=f"monotonicity {param} under {rel}")
    violations = []
    tested = 0
    attempts = 0
    while tested < trials and attempts < trials * 20:
        attempts += 1
        g = rng.choice(pool)
        h = g
        for _ in range(rng.randint(1, 3)):
            moves = reduction_moves(rel, h)
            if not moves:
                break
            h = rng.choice(moves)
        if budget is not None:
            budget.tick()
        try:
            pg = parameter_value(param, g)
            ph = parameter_value(param, h)
        except (CapExceeded, Undefined):
            continue
        tested += 1
        if ph > pg:
            violations.append((h, g, ph, pg))
    report.add(
        f"{tested} sampled pairs",
        not violations,
        witness=violations[0][0] if violations else None,
        details=f"{len(violations)} violations" if violations else "",
    )
    report.violations = violations
    return report
