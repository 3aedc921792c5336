"""Command-line surface.

Exit codes: 0 pass, 1 check failure or negative answer, 2 usage error,
3 budget exhaustion.  Graph arguments are graph6/multig codes, or "-"
to read one code from stdin.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import catalog, codec, families, oracles, relations
from .errors import BudgetExceeded, ObstructaError, SchemaError
from .hierarchy import GraphSample, dominance_evidence, omnivore_check
from .obstructions import Budget, enumerate_obstructions
from .parameters import parameter_value


def _read_graph(token):
    if token == "-":
        token = sys.stdin.readline().strip()
    return codec.load_graph(token)


def _emit_graph(g, fmt):
    if fmt == "graph6":
        return codec.to_graph6(g)
    if fmt == "multig":
        return codec.to_multig(g)
    if fmt == "json":
        return json.dumps(
            {"n": g.n, "edges": sorted([u, v, m]
                                       for (u, v), m in g.edges.items())})
    return codec.dump_graph(g)


def _class_oracle(rel, name, t_cap):
    """A builtin class name, or family:t for a family closure."""
    if ":" in name:
        fam, t = name.rsplit(":", 1)
        return oracles.closure_of(rel, fam.replace("-", "_"), int(t))
    return oracles.builtin(name.replace("-", "_"))


def _add_format(p):
    p.add_argument("--format", choices=("auto", "graph6", "multig", "json"),
                   default="auto")


def build_parser():
    ap = argparse.ArgumentParser(prog="obstructa")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("generate", help="emit one member of a family")
    p.add_argument("family")
    p.add_argument("t", type=int)
    _add_format(p)

    p = sub.add_parser("compute", help="evaluate a parameter on a graph")
    p.add_argument("parameter")
    p.add_argument("graph")

    p = sub.add_parser("contains", help="test a containment relation")
    p.add_argument("relation", choices=relations.RELATIONS)
    p.add_argument("pattern")
    p.add_argument("host")

    p = sub.add_parser("obstructions",
                       help="enumerate minimal excluded graphs")
    p.add_argument("--relation", required=True,
                   choices=relations.RELATIONS)
    p.add_argument("--class", dest="cls", required=True,
                   help="builtin class name, or family:t for a closure")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--multigraph", action="store_true")
    p.add_argument("--max-multiplicity", type=int, default=4)
    p.add_argument("--budget-ms", type=int, default=None)
    _add_format(p)

    p = sub.add_parser("verify", help="re-check a shipped catalog entry")
    p.add_argument("what", choices=("entry",))
    p.add_argument("name")
    p.add_argument("--budget-ms", type=int, default=None)
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("compare",
                       help="empirical dominance evidence for two parameters")
    p.add_argument("pa")
    p.add_argument("pb")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--family", action="append", default=[],
                   metavar="ID:LO:HI")

    p = sub.add_parser("omnivore",
                       help="check a family is an omnivore of a class")
    p.add_argument("family")
    p.add_argument("--relation", required=True,
                   choices=relations.RELATIONS)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--t-cap", type=int, default=8)
    p.add_argument("--budget-ms", type=int, default=None)

    p = sub.add_parser("catalog", help="inspect or round-trip the catalog")
    p.add_argument("action", choices=("list", "show", "check", "export"))
    p.add_argument("arg", nargs="?")

    return ap


def _cmd_generate(args):
    g = families.family_member(args.family.replace("-", "_"), args.t)
    print(_emit_graph(g, args.format))
    return 0


def _cmd_compute(args):
    g = _read_graph(args.graph)
    v = parameter_value(args.parameter, g)
    print(v)
    return 0


def _cmd_contains(args):
    h = _read_graph(args.pattern)
    g = _read_graph(args.host)
    cap = max(h.n, g.n, relations.DEFAULT_CAPS[args.relation])
    yes = relations.contains(args.relation, h, g, cap=cap)
    print("true" if yes else "false")
    return 0 if yes else 1


def _cmd_obstructions(args):
    orc = _class_oracle(args.relation, args.cls, args.max_n + 4)
    budget = Budget(time_ms=args.budget_ms)
    res = enumerate_obstructions(
        args.relation, orc, args.max_n, budget,
        multigraph=args.multigraph, max_multiplicity=args.max_multiplicity)
    for g in sorted(res.graphs, key=lambda g: (g.n, g.m, sorted(g.edges))):
        print(_emit_graph(g, args.format))
    print(f"# {res.completeness[0]} {res.completeness[1]}", file=sys.stderr)
    return 0


def _cmd_verify(args):
    from .obstructions import verify_catalog_entry

    entry = catalog.get_entry(args.name)
    budget = Budget(time_ms=args.budget_ms)
    rep = verify_catalog_entry(entry, budget)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=1, sort_keys=True))
    else:
        print(rep)
    return 0 if rep.passed else 1


def _cmd_compare(args):
    fams = []
    for spec in args.family:
        fam, lo, hi = spec.rsplit(":", 2)
        fams.append((fam.replace("-", "_"), int(lo), int(hi)))
    sample = GraphSample(n_max=args.max_n, families=tuple(fams))
    rep = dominance_evidence(args.pa, args.pb, sample)
    print(f"verdict: {rep.verdict}")
    print(f"samples: {rep.samples_tested}")
    for vb in sorted(rep.envelope):
        print(f"  {args.pb}={vb} -> max {args.pa}={rep.envelope[vb]}")
    if rep.witness is not None:
        print(f"witness: {rep.witness}")
    return 0 if rep.verdict == "consistent" else 1


def _cmd_omnivore(args):
    rel = args.relation
    orc = _class_oracle(rel, args.cls, args.t_cap)
    budget = Budget(time_ms=args.budget_ms)
    rep = omnivore_check(args.family.replace("-", "_"), rel, orc,
                         args.max_n, args.t_cap, budget=budget)
    print(rep)
    return 0 if rep.passed else 1


def _cmd_catalog(args):
    if args.action == "list":
        for name in catalog.entry_names():
            e = catalog.get_entry(name)
            print(f"{name}\t{e.relation}\t{len(e.pobs_sets)} sets")
        return 0
    if args.action == "show":
        if not args.arg:
            raise SchemaError("catalog show needs an entry name")
        e = catalog.get_entry(args.arg)
        out = {
            "parameter": e.parameter,
            "relation": e.relation,
            "universal_family": list(e.universal_family),
            "classes": list(e.class_obstruction_names),
            "pobs": [
                {"label": p.label,
                 "graphs": [codec.dump_graph(g) for g in p.graphs],
                 "complete": p.complete}
                for p in e.pobs_sets
            ],
            "notes": e.notes,
        }
        print(json.dumps(out, indent=1, sort_keys=True))
        return 0
    if args.action == "check":
        if not args.arg:
            raise SchemaError("catalog check needs a file path")
        raw = catalog.load_catalog_file(args.arg)
        text = catalog.canonical_text(raw)
        with open(args.arg) as fh:
            same = fh.read() == text
        print(f"entries: {len(raw['entries'])}")
        print("canonical: " + ("yes" if same else "no"))
        return 0 if same else 1
    if args.action == "export":
        if not args.arg:
            raise SchemaError("catalog export needs a file path")
        from importlib import resources

        text = resources.files("obstructa.data").joinpath(
            "catalog.json").read_text()
        catalog.save_catalog_file(json.loads(text), args.arg)
        print(f"wrote {args.arg}")
        return 0
    raise SchemaError(f"unknown catalog action {args.action!r}")


_DISPATCH = {
    "generate": _cmd_generate,
    "compute": _cmd_compute,
    "contains": _cmd_contains,
    "obstructions": _cmd_obstructions,
    "verify": _cmd_verify,
    "compare": _cmd_compare,
    "omnivore": _cmd_omnivore,
    "catalog": _cmd_catalog,
}


def run(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return _DISPATCH[args.cmd](args)
    except BudgetExceeded as e:
        print(f"budget exhausted: {e}", file=sys.stderr)
        return 3
    except (ObstructaError, ValueError, KeyError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
