"""Canonical textual instance format (JSON) and its parser/serializer.

An instance file names a degree group, a ring and module construction with
their gradings, and generator lists for ideals, submodules, multiplicative
sets, and degrees.  Elements are carrier indices; carriers with tuple shape
(products, group rings) also accept tuple arrays.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .core import (
    AlgebraicSubset,
    Carrier,
    EngineError,
    build_module,
    build_ring,
    span,
    tuple_to_index,
)
from .constructions import MultiplicativeSet, multiplicative_closure
from .grading import (
    Degree,
    GradedModule,
    GradedRing,
    GradingGroup,
    graded_module,
    graded_ring,
    group_ring_components,
    trivial_components,
)


class InstanceFileError(EngineError):
    """Parse or schema failure with a positional diagnostic."""

    def __init__(self, message: str, where: str = ""):
        self.where = where
        super().__init__(f"{where}: {message}" if where else message)


@dataclass(frozen=True, eq=False)
class ParsedInstance:
    ring_graded: GradedRing
    module_graded: GradedModule
    ideals: dict[str, AlgebraicSubset]
    submodules: dict[str, AlgebraicSubset]
    mult_sets: dict[str, MultiplicativeSet]
    degrees: dict[str, Degree]
    notes: str = ""
    source: dict = field(default_factory=dict)


def _expect(d: dict, key: str, where: str) -> Any:
    if key not in d:
        raise InstanceFileError(f"missing required key {key!r}", where)
    return d[key]


def _decode_element(value, carrier: Carrier, where: str) -> int:
    if isinstance(value, bool):
        raise InstanceFileError("boolean is not an element", where)
    if isinstance(value, int):
        if not 0 <= value < carrier.size:
            raise InstanceFileError(f"element {value} out of range 0..{carrier.size - 1}", where)
        return value
    if isinstance(value, list):
        if carrier.tuple_shape is None:
            raise InstanceFileError("tuple element on a carrier without tuple shape", where)
        try:
            return tuple_to_index(carrier.tuple_shape, tuple(int(v) for v in value))
        except EngineError as exc:
            raise InstanceFileError(str(exc), where) from exc
    raise InstanceFileError(f"element must be an int or tuple array, got {value!r}", where)


def _decode_elements(values, carrier: Carrier, where: str) -> list[int]:
    if not isinstance(values, list):
        raise InstanceFileError("expected a list of elements", where)
    return [_decode_element(v, carrier, f"{where}[{i}]") for i, v in enumerate(values)]


def _decode_degree(value, group: GradingGroup, where: str) -> Degree:
    if not isinstance(value, list) or len(value) != len(group.orders):
        raise InstanceFileError(
            f"degree must be a residue array of length {len(group.orders)}", where)
    deg = tuple(int(v) % o for v, o in zip(value, group.orders))
    return deg


def _degree_key(g: Degree) -> str:
    return ",".join(str(x) for x in g)


def _parse_degree_key(key: str, group: GradingGroup, where: str) -> Degree:
    try:
        parts = tuple(int(p) for p in key.split(","))
    except ValueError as exc:
        raise InstanceFileError(f"bad degree key {key!r}", where) from exc
    if len(parts) != len(group.orders):
        raise InstanceFileError(f"degree key {key!r} has wrong arity", where)
    return tuple(p % o for p, o in zip(parts, group.orders))


def _parse_grading(spec, carrier: Carrier, group: GradingGroup, where: str):
    if spec == "trivial" or spec is None:
        return trivial_components(carrier, group)
    if spec == "group_ring":
        if carrier.tuple_shape is None or len(carrier.tuple_shape) != group.size:
            raise InstanceFileError(
                "'group_ring' grading needs a carrier with one slot per degree", where)
        return group_ring_components(carrier, group)
    if isinstance(spec, dict) and "components" in spec:
        comps = {}
        raw = spec["components"]
        if not isinstance(raw, dict):
            raise InstanceFileError("components must be a mapping", where)
        for key, elems in raw.items():
            g = _parse_degree_key(key, group, f"{where}.components")
            comps[g] = tuple(_decode_elements(elems, carrier, f"{where}.components[{key}]"))
        return comps
    raise InstanceFileError("grading must be 'trivial', 'group_ring', or {components: ...}", where)


def parse_instance_text(text: str, origin: str = "<string>") -> ParsedInstance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFileError(
            f"parse error at line {exc.lineno} column {exc.colno}: {exc.msg}", origin) from exc
    if not isinstance(doc, dict):
        raise InstanceFileError("top level must be an object", origin)

    group_spec = _expect(doc, "group", "group")
    orders = tuple(int(o) for o in _expect(group_spec, "cyclic_orders", "group"))
    group = GradingGroup(orders)

    ring_spec = _expect(doc, "ring", "ring")
    ring = build_ring(_expect(ring_spec, "construction", "ring"))
    ring_comps = _parse_grading(ring_spec.get("grading", "trivial"), ring, group,
                                "ring.grading")
    gr = graded_ring(ring, group, ring_comps)

    mod_spec = _expect(doc, "module", "module")
    module = build_module(_expect(mod_spec, "construction", "module"), ring)
    mod_comps = _parse_grading(mod_spec.get("grading", "trivial"), module, group,
                               "module.grading")
    gm = graded_module(gr, module, mod_comps)

    ideals = {}
    for name, gens in sorted(doc.get("ideals", {}).items()):
        ideals[name] = span(ring, "ideal", _decode_elements(gens, ring, f"ideals.{name}"))
    submodules = {}
    for name, gens in sorted(doc.get("submodules", {}).items()):
        submodules[name] = span(module, "submodule",
                                _decode_elements(gens, module, f"submodules.{name}"))
    mult_sets = {}
    for name, gens in sorted(doc.get("mult_sets", {}).items()):
        mult_sets[name] = multiplicative_closure(
            gr, _decode_elements(gens, ring, f"mult_sets.{name}"))
    degrees = {}
    for name, value in sorted(doc.get("degrees", {}).items()):
        degrees[name] = _decode_degree(value, group, f"degrees.{name}")

    return ParsedInstance(gr, gm, ideals, submodules, mult_sets, degrees,
                          notes=str(doc.get("notes", "")), source=doc)


def parse_instance_file(path: str) -> ParsedInstance:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InstanceFileError(str(exc), path) from exc
    if not text.strip():
        raise InstanceFileError("parse error at line 1 column 1: empty document", path)
    return parse_instance_text(text, path)


def serialize_instance(parsed: ParsedInstance) -> dict:
    """Canonical document for a parsed instance; parse(serialize(p)) round-trips."""
    gm, gr = parsed.module_graded, parsed.ring_graded
    doc: dict[str, Any] = {}
    if parsed.notes:
        doc["notes"] = parsed.notes
    doc["group"] = {"cyclic_orders": list(gr.group.orders)}
    src = parsed.source
    ring_cons = src.get("ring", {}).get("construction")
    mod_cons = src.get("module", {}).get("construction")
    if ring_cons is None or mod_cons is None:
        raise InstanceFileError("cannot serialize an instance without source constructions")
    doc["ring"] = {
        "construction": ring_cons,
        "grading": {"components": {
            _degree_key(g): list(elems) for g, elems in gr.grading.components
        }},
    }
    doc["module"] = {
        "construction": mod_cons,
        "grading": {"components": {
            _degree_key(g): list(elems) for g, elems in gm.grading.components
        }},
    }
    doc["ideals"] = {name: list(sub.elements) for name, sub in sorted(parsed.ideals.items())}
    doc["submodules"] = {name: list(sub.elements) for name, sub in sorted(parsed.submodules.items())}
    doc["mult_sets"] = {name: list(ms.elements) for name, ms in sorted(parsed.mult_sets.items())}
    doc["degrees"] = {name: list(d) for name, d in sorted(parsed.degrees.items())}
    return doc
