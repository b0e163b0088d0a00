"""JSON documents for categories, object sets, functions, maps and networks.

Rationals are written as ``"p/q"`` strings in lowest terms (``"p"`` when
the denominator is 1); on input integers are accepted too. Structural
problems raise :class:`~eulercat.errors.ParseError`; well-formed documents
describing invalid objects raise the relevant domain error.
"""

from __future__ import annotations

import json
from pathlib import Path

from .category import FiniteCategory, category_violations, new_category
from .definable import (
    PRIME_FILTERS,
    PRIME_IDEALS,
    DefinableFunction,
    FilterDecomposition,
    definable_function,
)
from .errors import EulerCalcError, ParseError
from .integration import ObjectMap, object_map
from .rational import format_rational, to_fraction
from .sensor import (
    EDGE,
    NODE,
    SensorNetwork,
    TargetPlacement,
    counting_function,
    network_violations,
    new_network,
)

__all__ = [
    "load_json",
    "dump_json",
    "category_from_doc",
    "category_to_doc",
    "objectset_from_doc",
    "objectset_to_doc",
    "function_from_doc",
    "function_to_doc",
    "decomposition_to_doc",
    "decomposition_from_doc",
    "map_from_doc",
    "map_to_doc",
    "network_from_doc",
    "network_to_doc",
    "load_category",
    "load_network",
    "load_map",
    "document_kind",
    "validate_document",
]


def load_json(path) -> dict:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    return doc


def dump_json(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False)


def _require(doc, key, kind, where="document"):
    if key not in doc:
        raise ParseError(f"{where}: missing field {key!r}")
    if not isinstance(doc[key], kind):
        raise ParseError(f"{where}: field {key!r} has the wrong type")
    return doc[key]


def _rational(v, where):
    try:
        return to_fraction(v)
    except (TypeError, ValueError) as exc:
        raise ParseError(f"{where}: {exc}") from None


def _category_parts(doc):
    objects = _require(doc, "objects", list, "category")
    hom = _require(doc, "hom", list, "category")
    if not all(isinstance(x, str) for x in objects):
        raise ParseError("category: object identifiers must be strings")
    if not all(isinstance(row, list) for row in hom):
        raise ParseError("category: hom must be a list of rows")
    for row in hom:
        for v in row:
            if isinstance(v, bool) or not isinstance(v, int):
                raise ParseError("category: hom entries must be integers")
    return objects, hom


def category_from_doc(doc) -> FiniteCategory:
    objects, hom = _category_parts(doc)
    return new_category(objects, hom)


def category_to_doc(C: FiniteCategory) -> dict:
    return {"objects": list(C.objects), "hom": [list(row) for row in C.hom]}


def objectset_from_doc(C: FiniteCategory, doc) -> tuple:
    members = _require(doc, "members", list, "object set")
    return C.members(members)


def objectset_to_doc(S) -> dict:
    return {"members": list(S)}


def function_from_doc(C: FiniteCategory, doc) -> DefinableFunction:
    values = _require(doc, "values", dict, "function")
    return definable_function(C, {k: _rational(v, f"function value {k!r}") for k, v in values.items()})


def function_to_doc(f: DefinableFunction) -> dict:
    return {"values": {x: format_rational(v) for x, v in f.as_dict().items()}}


def decomposition_to_doc(d: FilterDecomposition) -> dict:
    return {
        "basis": d.basis,
        "terms": [{"coef": format_rational(c), "rep": rep} for c, rep in d.terms],
    }


def decomposition_from_doc(C: FiniteCategory, doc) -> FilterDecomposition:
    basis = _require(doc, "basis", str, "decomposition")
    if basis not in (PRIME_FILTERS, PRIME_IDEALS):
        raise ParseError(f"decomposition: unknown basis {basis!r}")
    terms = []
    for t in _require(doc, "terms", list, "decomposition"):
        if not isinstance(t, dict):
            raise ParseError("decomposition: terms must be objects")
        rep = _require(t, "rep", str, "decomposition term")
        C.index(rep)
        terms.append((_rational(t.get("coef"), "decomposition coef"), rep))
    return FilterDecomposition(C, basis, tuple(terms))


def load_category(path) -> FiniteCategory:
    return category_from_doc(load_json(path))


def map_from_doc(doc, base_dir=".") -> ObjectMap:
    src = _require(doc, "source", str, "map")
    tgt = _require(doc, "target", str, "map")
    mapping = _require(doc, "map", dict, "map")
    base = Path(base_dir)
    C = load_category(base / src)
    D = load_category(base / tgt)
    return object_map(C, D, mapping)


def map_to_doc(F: ObjectMap, source_path: str, target_path: str) -> dict:
    return {"source": source_path, "target": target_path, "map": F.as_dict()}


def load_map(path) -> ObjectMap:
    return map_from_doc(load_json(path), Path(path).parent)


def _network_parts(doc):
    nodes = _require(doc, "nodes", list, "network")
    hasse = doc.get("hasse", [])
    if not isinstance(hasse, list):
        raise ParseError("network: field 'hasse' has the wrong type")
    edges = []
    for e in hasse:
        if not (isinstance(e, list) and len(e) == 2):
            raise ParseError("network: each Hasse edge must be a [from, to] pair")
        edges.append((e[0], e[1]))
    targets = []
    for t in doc.get("targets", []):
        if not isinstance(t, dict) or t.get("on") not in (NODE, EDGE):
            raise ParseError('network: each target needs "on": "node" | "edge"')
        if t["on"] == NODE:
            targets.append(TargetPlacement(NODE, _require(t, "at", str, "node target")))
        else:
            p = _require(t, "from", str, "edge target")
            q = _require(t, "to", str, "edge target")
            targets.append(TargetPlacement(EDGE, (p, q)))
    return nodes, edges, targets


def network_from_doc(doc) -> tuple:
    """``(network, placements)`` from a network document."""
    nodes, edges, targets = _network_parts(doc)
    return new_network(nodes, edges), targets


def network_to_doc(net: SensorNetwork, targets=()) -> dict:
    out = []
    for t in targets:
        if t.kind == NODE:
            out.append({"on": NODE, "at": t.at})
        else:
            out.append({"on": EDGE, "from": t.at[0], "to": t.at[1]})
    return {"nodes": list(net.nodes), "hasse": [list(e) for e in net.hasse_edges], "targets": out}


def load_network(path) -> tuple:
    return network_from_doc(load_json(path))


def document_kind(doc) -> str:
    if "objects" in doc and "hom" in doc:
        return "category"
    if "nodes" in doc:
        return "network"
    if "source" in doc and "map" in doc:
        return "map"
    if "basis" in doc and "terms" in doc:
        return "decomposition"
    if "values" in doc:
        return "function"
    if "members" in doc:
        return "objectset"
    raise ParseError("unrecognised document: no known field set")


def validate_document(path) -> list:
    """Every violated invariant of the document at ``path``; empty when valid.

    Categories and networks are checked exhaustively. Maps are checked for
    totality (and their categories); functions and object sets can only be
    checked structurally without an ambient category.
    """
    doc = load_json(path)
    kind = document_kind(doc)
    if kind == "category":
        objects, hom = _category_parts(doc)
        return [msg for _, msg in category_violations(objects, hom)]
    if kind == "network":
        nodes, edges, targets = _network_parts(doc)
        problems = [msg for _, msg in network_violations(nodes, edges)]
        if not problems:
            net = new_network(nodes, edges)
            for t in targets:
                try:
                    counting_function(net, [t])
                except EulerCalcError as exc:
                    problems.append(str(exc))
        return problems
    if kind == "map":
        try:
            load_map(path)
        except EulerCalcError as exc:
            return [str(exc)]
        return []
    if kind == "function":
        values = _require(doc, "values", dict, "function")
        for k, v in values.items():
            _rational(v, f"function value {k!r}")
        return []
    if kind == "decomposition":
        basis = _require(doc, "basis", str, "decomposition")
        if basis not in (PRIME_FILTERS, PRIME_IDEALS):
            raise ParseError(f"decomposition: unknown basis {basis!r}")
        return []
    _require(doc, "members", list, "object set")
    return []
