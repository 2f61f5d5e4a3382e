"""JSON input/output and DOT export.

The input schema names unoriented separations; oriented names are derived
with "+"/"-" suffixes, and degenerate separations are listed separately
under a single name.  Relations are generators: the order closure is applied
on load.  Unknown fields are rejected.
"""

from __future__ import annotations

import json
from typing import Any

from .concrete import Graph
from .core import SepSystem, build_system
from .errors import InvalidInput
from .universe import Universe, build_universe
from .workbench import Lattice, Tree

_FIELDS = {
    "system": {"kind", "separations", "degenerate", "relations"},
    "universe": {"kind", "separations", "degenerate", "relations"},
    "lattice": {"kind", "separations", "relations"},
    "graph": {"kind", "vertices", "edges"},
    "tree": {"kind", "vertices", "edges"},
}


def _expect_names(data: Any, what: str) -> list[str]:
    if not isinstance(data, list) or not all(isinstance(x, str) and x for x in data):
        raise InvalidInput(f"{what} must be a list of non-empty strings")
    if len(set(data)) != len(data):
        raise InvalidInput(f"duplicate names in {what}")
    return list(data)


def _expect_pairs(data: Any, what: str) -> list[tuple[str, str]]:
    out = []
    if not isinstance(data, list):
        raise InvalidInput(f"{what} must be a list of pairs")
    for item in data:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, str) for x in item)):
            raise InvalidInput(f"{what} entries must be pairs of strings")
        out.append((item[0], item[1]))
    return out


def loads(data: dict):
    """Parse one schema object into the corresponding structure."""
    if not isinstance(data, dict):
        raise InvalidInput("top-level value must be an object")
    kind = data.get("kind")
    if kind not in _FIELDS:
        raise InvalidInput(f"unknown kind {kind!r}")
    extra = set(data) - _FIELDS[kind]
    if extra:
        raise InvalidInput(f"unknown fields for kind {kind!r}: {sorted(extra)}")

    if kind in ("system", "universe"):
        seps = _expect_names(data.get("separations", []), "separations")
        degs = _expect_names(data.get("degenerate", []), "degenerate")
        if set(seps) & set(degs):
            raise InvalidInput("a name cannot be both a separation and degenerate")
        relations = _expect_pairs(data.get("relations", []), "relations")
        labels, pairs = [], []
        for s in seps:
            labels += [f"{s}+", f"{s}-"]
            pairs.append((f"{s}+", f"{s}-"))
        labels += degs
        known = set(labels)
        for a, b in relations:
            if a not in known or b not in known:
                raise InvalidInput(f"relation ({a!r}, {b!r}) references unknown oriented names")
        try:
            system = build_system(labels, pairs, relations)
        except Exception as exc:
            raise InvalidInput(f"invalid system: {exc}") from exc
        if kind == "universe":
            return build_universe(system)
        return system

    if kind == "lattice":
        elems = _expect_names(data.get("separations", []), "separations")
        relations = _expect_pairs(data.get("relations", []), "relations")
        known = set(elems)
        for a, b in relations:
            if a not in known or b not in known:
                raise InvalidInput(f"relation ({a!r}, {b!r}) references unknown elements")
        try:
            return Lattice(elems, relations)
        except Exception as exc:
            raise InvalidInput(f"invalid lattice: {exc}") from exc

    vertices = _expect_names(data.get("vertices", []), "vertices")
    edges = _expect_pairs(data.get("edges", []), "edges")
    try:
        if kind == "graph":
            return Graph(tuple(vertices), frozenset(edges))
        return Tree(tuple(vertices), tuple(edges))
    except Exception as exc:
        raise InvalidInput(f"invalid {kind}: {exc}") from exc


def load_path(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidInput(f"cannot read {path}: {exc}") from exc
    return loads(data)


def _orbit_names(system: SepSystem) -> tuple[dict[str, str], list[str], list[str]]:
    """Name each orbit; reuse conforming +/- labels, else synthesize fresh ones."""
    oriented_name: dict[str, str] = {}
    seps, degs = [], []
    used: set[str] = set()
    fresh = 0

    def synth() -> str:
        nonlocal fresh
        while True:
            cand = f"u{fresh}"
            fresh += 1
            if cand not in used:
                return cand

    for orbit in system.unoriented():
        if len(orbit) == 1:
            d = orbit[0]
            name = d if (d and not d.endswith(("+", "-")) and d not in used) else synth()
            used.add(name)
            degs.append(name)
            oriented_name[d] = name
        else:
            a, b = orbit
            if b.endswith("+") and a.endswith("-") and a[:-1] == b[:-1]:
                a, b = b, a
            if a.endswith("+") and b.endswith("-") and a[:-1] == b[:-1] and a[:-1] and a[:-1] not in used:
                name = a[:-1]
            else:
                name = synth()
            used.add(name)
            seps.append(name)
            oriented_name[a] = name + "+"
            oriented_name[b] = name + "-"
    return oriented_name, seps, degs


def system_to_dict(system: SepSystem) -> dict:
    names, seps, degs = _orbit_names(system)
    out = {
        "kind": "universe" if isinstance(system, Universe) else "system",
        "separations": seps,
        "degenerate": degs,
        "relations": [[names[a], names[b]] for a, b in system.relations()],
    }
    return out


def graph_to_dict(g: Graph) -> dict:
    pos = {v: i for i, v in enumerate(g.vertices)}
    return {
        "kind": "graph",
        "vertices": list(g.vertices),
        "edges": sorted([[u, v] for u, v in g.edges], key=lambda e: (pos[e[0]], pos[e[1]])),
    }


def tree_to_dict(t: Tree) -> dict:
    return {"kind": "tree", "vertices": list(t.vertices), "edges": [[u, v] for u, v in t.edges]}


def implementation_to_dict(impl) -> dict:
    cert = {
        "mode": impl.mode,
        "ground": list(impl.target.points),
        "map": {},
        "verified": True,
    }
    for x in impl.source.elements():
        a, b = impl.target.side_points(impl.image(x))
        cert["map"][x if isinstance(x, str) else repr(x)] = [list(a), list(b)]
    if impl.graph is not None:
        cert["graph"] = graph_to_dict(impl.graph)
    return cert


def to_dot(g: Graph) -> str:
    """DOT text: vertices in ground order, undirected edges, no attributes."""
    pos = {v: i for i, v in enumerate(g.vertices)}
    lines = ["graph G {"]
    for v in g.vertices:
        lines.append(f'  "{v}";')
    for u, v in sorted(g.edges, key=lambda e: (pos[e[0]], pos[e[1]])):
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
