"""Decidable membership oracles for graph classes.

An oracle is a callable on graphs with a stable `key` used for
memoization. Builtins cover the fixed classes the catalog needs;
ExclusionOf / ClosureOf / ParameterLevel build oracles from data.
"""

from . import relations
from .canon import canonical_form
from .errors import OracleDomainError
from .graphs import complete_graph, complete_bipartite


class MembershipOracle:
    def __init__(self, key, fn):
        self.key = key
        self._fn = fn
        self._memo = {}

    def __call__(self, g):
        if g.n > 12:
            # canonical codes of big graphs cost more than the test
            return self._fn(g)
        code = canonical_form(g)
        if code not in self._memo:
            if len(self._memo) > 200000:
                self._memo.clear()
            self._memo[code] = self._fn(g)
        return self._memo[code]

    def __repr__(self):
        return f"MembershipOracle({self.key})"


def _forest_check(g):
    if not g.simple:
        return False
    comps = g.components()
    edge_total = g.m
    return edge_total == g.n - len(comps)


def _is_linear_forest(g):
    return _forest_check(g) and g.max_degree() <= 2


def _is_caterpillar_forest(g):
    """Every component a caterpillar: removing all leaves leaves a path."""
    if not _forest_check(g):
        return False
    for comp in g.component_graphs():
        if comp.n <= 2:
            continue
        keep = [v for v in range(comp.n) if comp.degree(v) >= 2]
        spine = comp.induced(keep)
        if spine.n and (spine.max_degree() > 2 or not spine.is_connected()):
            return False
    return True


def _is_outerplanar(g):
    if not g.simple:
        g = g.underlying_simple()
    if g.n <= 3:
        return True
    if relations.minor_model(complete_graph(4), g) is not None:
        return False
    return relations.minor_model(complete_bipartite(2, 3), g) is None


def _is_edgeless(g):
    return g.m == 0


def _is_null(g):
    return g.n == 0


def _is_subcubic_forest(g):
    return _forest_check(g) and g.max_degree() <= 3


def _is_subcubic_planar(g):
    return g.max_degree() <= 3 and relations.is_planar(g)


def _is_star_forest(g):
    """Matching plus at most one larger star; the class excluded by
    {Theta_2, 2*P_3, P_4} under immersion."""
    if not _forest_check(g):
        return False
    big = 0
    for comp in g.component_graphs():
        if comp.n >= 3:
            if comp.max_degree() < comp.n - 1:
                return False  # not a star
            big += 1
    return big <= 1


def _is_matching_forest(g):
    return g.simple and g.max_degree() <= 1


def _is_apex_forest(g):
    if _forest_check(g):
        return True
    return any(
        _forest_check(g.induced(set(range(g.n)) - {v})) for v in range(g.n))


_BUILTINS = {
    "forest": _forest_check,
    "linear_forest": _is_linear_forest,
    "caterpillar": _is_caterpillar_forest,
    "outerplanar": _is_outerplanar,
    "planar": relations.is_planar,
    "edgeless": _is_edgeless,
    "null": _is_null,
    "subcubic_forest": _is_subcubic_forest,
    "subcubic_planar": _is_subcubic_planar,
    "star_forest_i": _is_star_forest,
    "matching_forest": _is_matching_forest,
    "apex_forest": _is_apex_forest,
}


def builtin(name):
    if name not in _BUILTINS:
        raise OracleDomainError(f"unknown builtin class {name!r}")
    return MembershipOracle(("builtin", name), _BUILTINS[name])


def exclusion_of(rel, graphs):
    """Class of graphs containing none of `graphs` under rel."""
    graphs = tuple(graphs)
    key = ("excl", rel, tuple(sorted(canonical_form(h) for h in graphs)))

    def fn(g):
        caps = max(relations.DEFAULT_CAPS[rel], g.n)
        return not any(relations.contains(rel, h, g, cap=caps) for h in graphs)

    return MembershipOracle(key, fn)


def closure_of(rel, family_id, t_cap):
    """Downward closure of a monotone family, tested against the
    t_cap member. Monotonicity makes a negative answer sound."""
    from . import families

    member = families.family_member(family_id, t_cap)
    key = ("closure", rel, str(family_id), t_cap)

    def fn(g):
        cap = max(relations.DEFAULT_CAPS[rel], member.n, g.n)
        return relations.contains(rel, g, member, cap=cap)

    return MembershipOracle(key, fn)


def parameter_level(param, k):
    """Graphs whose named parameter value is at most k."""
    from . import parameters

    def fn(g):
        return parameters.parameter_value(param, g) <= k

    return MembershipOracle(("plevel", param, k), fn)
