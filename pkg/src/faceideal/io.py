"""JSON interchange for complexes, ideals, posets, whisker specs and orders.

Schemas::

    complex  {"vertices": [...], "facets": [[label, ...], ...]}
    ideal    {"variables": [...], "generators": [[name, ...] | "x1*y2", ...]}
    poset    {"elements": [...], "relations": [[a, b], ...]}     (a < b)
    spec     {"k": [...], "d": [...]}
    order    [[label, ...], ...]  or  {"order": [[label, ...], ...]}

Every ``*_to_json`` output parses back to an equal object.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .complex import SimplicialComplex, VertexUniverse
from .ideal import MonomialIdeal, VariableUniverse, minimize
from .poset import Poset, PosetError
from .whisker_hd import WhiskerSpec


class InputError(ValueError):
    """Malformed or inconsistent JSON input."""


def load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def _field(obj: Any, key: str, what: str) -> Any:
    if not isinstance(obj, dict):
        raise InputError(f"{what} must be a JSON object")
    if key not in obj:
        raise InputError(f"{what} is missing the {key!r} field")
    return obj[key]


def _labels(seq: Any, what: str) -> tuple[str, ...]:
    if not isinstance(seq, list):
        raise InputError(f"{what} must be a list")
    out = []
    for v in seq:
        if isinstance(v, bool) or not isinstance(v, (str, int)):
            raise InputError(f"{what}: label {v!r} is not a string or integer")
        out.append(str(v))
    if len(set(out)) != len(out):
        raise InputError(f"{what}: labels must be distinct")
    return tuple(out)


def _label_sets(seq: Any, what: str) -> list[tuple[str, ...]]:
    if not isinstance(seq, list):
        raise InputError(f"{what} must be a list of lists")
    out = []
    for item in seq:
        if not isinstance(item, list):
            raise InputError(f"{what}: entry {item!r} is not a list")
        out.append(tuple(str(v) for v in item))
    return out


def complex_from_json(obj: Any) -> SimplicialComplex:
    uni = VertexUniverse(_labels(_field(obj, "vertices", "complex"), "vertices"))
    facets = _label_sets(_field(obj, "facets", "complex"), "facets")
    if not facets:
        raise InputError("facets: the void complex is not supported; use [[]] for {∅}")
    try:
        masks = [uni.mask(f) for f in facets]
    except KeyError as exc:
        raise InputError(f"facets: {exc.args[0]}") from None
    return SimplicialComplex.from_facets(uni, masks, quiet=True)


def complex_to_json(cx: SimplicialComplex) -> dict:
    return {"vertices": list(cx.universe.labels), "facets": cx.facet_names()}


def ideal_from_json(obj: Any) -> MonomialIdeal:
    uni = VariableUniverse(_labels(_field(obj, "variables", "ideal"), "variables"))
    gens = _field(obj, "generators", "ideal")
    if not isinstance(gens, list) or not gens:
        raise InputError("generators must be a nonempty list")
    masks = []
    for g in gens:
        if isinstance(g, str):
            names = [] if g.strip() == "1" else [p.strip() for p in g.split("*")]
        elif isinstance(g, list):
            names = [str(v) for v in g]
        else:
            raise InputError(f"generators: entry {g!r} is neither a list nor a string")
        try:
            masks.append(uni.monomial(names))
        except KeyError as exc:
            raise InputError(f"generators: {exc.args[0]}") from None
    try:
        return minimize(uni, masks)
    except ValueError as exc:
        raise InputError(f"generators: {exc}") from None


def ideal_to_json(ideal: MonomialIdeal, *, pretty: bool = False) -> dict:
    uni = ideal.universe
    gens = ideal.render() if pretty else [uni.names_of(g) for g in ideal.generators]
    return {"variables": list(uni.names), "generators": gens}


def poset_from_json(obj: Any) -> Poset:
    labels = _labels(_field(obj, "elements", "poset"), "elements")
    rels = _field(obj, "relations", "poset")
    if not isinstance(rels, list):
        raise InputError("relations must be a list of [a, b] pairs")
    pairs = []
    for r in rels:
        if not isinstance(r, list) or len(r) != 2:
            raise InputError(f"relations: entry {r!r} is not a pair [a, b]")
        pairs.append((str(r[0]), str(r[1])))
    try:
        return Poset.from_relations(labels, pairs)
    except PosetError as exc:
        raise InputError(f"poset: {exc}") from None


def poset_to_json(P: Poset) -> dict:
    return {"elements": list(P.labels), "relations": [list(r) for r in P.relations()]}


def spec_from_json(obj: Any) -> WhiskerSpec:
    k = _field(obj, "k", "spec")
    d = _field(obj, "d", "spec")
    if not (isinstance(k, list) and isinstance(d, list)):
        raise InputError("spec: k and d must be lists of integers")
    if not all(isinstance(v, int) and not isinstance(v, bool) for v in k + d):
        raise InputError("spec: k and d must be lists of integers")
    try:
        return WhiskerSpec(tuple(k), tuple(d))
    except ValueError as exc:
        raise InputError(f"spec: {exc}") from None


def spec_to_json(spec: WhiskerSpec) -> dict:
    return {"k": list(spec.k), "d": list(spec.d)}


def order_from_json(obj: Any, universe: VertexUniverse) -> list[int]:
    if isinstance(obj, dict):
        obj = _field(obj, "order", "order")
    try:
        return [universe.mask(f) for f in _label_sets(obj, "order")]
    except KeyError as exc:
        raise InputError(f"order: {exc.args[0]}") from None


def order_to_json(order, universe: VertexUniverse) -> list[list[str]]:
    return [universe.names(f) for f in order]


__all__ = [
    "InputError",
    "complex_from_json",
    "complex_to_json",
    "ideal_from_json",
    "ideal_to_json",
    "load_json",
    "order_from_json",
    "order_to_json",
    "poset_from_json",
    "poset_to_json",
    "spec_from_json",
    "spec_to_json",
]
