"""Shipped catalog of parameter entries.

Each entry records, for one parameter under one containment relation:
the universal family ids, names of the classes whose exclusion
characterizes boundedness, and the transcribed or derived parametric
obstruction sets, together with a membership oracle spec used by
catalog verification.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources

from . import codec, oracles, relations
from .errors import OracleDomainError, SchemaError


@dataclass(frozen=True)
class PobsSet:
    """One obstruction set of one class excluded by the parameter."""
    label: str
    graphs: tuple
    family: str = None  # paired universal family id, if any
    oracle_spec: tuple = None
    complete: bool = True


@dataclass(frozen=True)
class CatalogEntry:
    parameter: str
    relation: str
    universal_family: tuple
    class_obstruction_names: tuple
    pobs_sets: tuple
    t_cap: int
    notes: str


_CACHE = None


def validate_raw(raw):
    """Schema check for a raw catalog dict; SchemaError names the
    offending field."""
    from . import families

    if not isinstance(raw, dict):
        raise SchemaError("catalog: top level must be an object")
    if not isinstance(raw.get("version"), str):
        raise SchemaError("catalog.version: missing or not a string")
    ents = raw.get("entries")
    if not isinstance(ents, list):
        raise SchemaError("catalog.entries: missing or not a list")
    for i, e in enumerate(ents):
        at = f"entries[{i}]"
        if not isinstance(e, dict):
            raise SchemaError(f"{at}: not an object")
        if not isinstance(e.get("parameter"), str) or not e["parameter"]:
            raise SchemaError(f"{at}.parameter: missing or empty")
        if e.get("relation") not in relations.RELATIONS:
            raise SchemaError(f"{at}.relation: missing or unknown")
        fams = e.get("universal_family")
        if not isinstance(fams, list) or not fams:
            raise SchemaError(f"{at}.universal_family: missing or empty")
        for f in fams:
            if f not in families.FAMILY_NAMES:
                raise SchemaError(f"{at}.universal_family: unknown id {f!r}")
        if not isinstance(e.get("notes"), str) or not e["notes"]:
            raise SchemaError(f"{at}.notes: every entry needs a note")
        for j, p in enumerate(e.get("pobs", [])):
            pat = f"{at}.pobs[{j}]"
            if not isinstance(p.get("label"), str):
                raise SchemaError(f"{pat}.label: missing")
            if p.get("family") is not None and \
                    p["family"] not in families.FAMILY_NAMES:
                raise SchemaError(f"{pat}.family: unknown id")
            for k, c in enumerate(p.get("graphs", [])):
                try:
                    codec.load_graph(c)
                except Exception:
                    raise SchemaError(f"{pat}.graphs[{k}]: bad graph code")


def canonical_text(raw):
    """The byte-exact serialization used for the shipped file."""
    return json.dumps(raw, indent=1, sort_keys=True) + "\n"


def load_catalog_file(path):
    """Validated raw catalog dict from a JSON file."""
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except ValueError as e:
            raise SchemaError(f"catalog: not valid JSON ({e})")
    validate_raw(raw)
    return raw


def save_catalog_file(raw, path):
    validate_raw(raw)
    with open(path, "w") as fh:
        fh.write(canonical_text(raw))


def load_catalog():
    """name -> CatalogEntry, parsed once from the shipped data file."""
    global _CACHE
    if _CACHE is None:
        text = resources.files("obstructa.data").joinpath(
            "catalog.json").read_text()
        raw = json.loads(text)
        validate_raw(raw)
        out = {}
        for e in raw["entries"]:
            psets = tuple(
                PobsSet(
                    label=p["label"],
                    graphs=tuple(codec.load_graph(c) for c in p["graphs"]),
                    family=p.get("family"),
                    oracle_spec=(
                        tuple(p["oracle"]) if p.get("oracle") else None),
                    complete=p.get("complete", True),
                )
                for p in e.get("pobs", [])
            )
            entry = CatalogEntry(
                parameter=e["parameter"],
                relation=e["relation"],
                universal_family=tuple(e["universal_family"]),
                class_obstruction_names=tuple(
                    e.get("class_obstruction_names", [])),
                pobs_sets=psets,
                t_cap=e.get("t_cap", 6),
                notes=e.get("notes", ""),
            )
            out[entry.parameter] = entry
        _CACHE = out
    return _CACHE


def entry_names():
    return tuple(sorted(load_catalog()))


def get_entry(name):
    cat = load_catalog()
    if name not in cat:
        raise KeyError(f"no catalog entry {name!r}")
    return cat[name]


def entry_oracle(entry, pset):
    """Membership oracle for the class whose obstruction set pset is,
    or None when the class has no desk-scale decision procedure."""
    spec = pset.oracle_spec
    if spec is None:
        return None
    kind = spec[0]
    if kind == "builtin":
        return oracles.builtin(spec[1])
    if kind == "closure":
        return oracles.closure_of(entry.relation, spec[1], int(spec[2]))
    if kind == "components_minor":
        base = codec.load_graph(spec[1])

        def fn(g):
            return all(
                relations.contains(relations.MINOR, g.induced(c), base)
                for c in g.components()
            )

        return oracles.MembershipOracle(("components_minor", spec[1]), fn)
    raise OracleDomainError(f"unknown oracle spec {spec!r}")
