"""JSON serialization for instances, formulas, mappings, and results.

Instance format (UTF-8, no comments)::

    {"g": {"n": 4, "edges": [[0, 1], [1, 2]]},
     "h": {"n": 4, "edges": [[0, 1], [1, 2]]},
     "lists": [[0, 2], [1], [0, 1, 2, 3], [3]]}

Edges are unordered pairs listed once.  "h" may be omitted: the file then
describes a ListAut instance and h is taken to be a copy of g.
"""

from __future__ import annotations

import json
from typing import Any

from .core import Graph, InstanceError, ListInstance, SolveResult
from .hardness import Cnf1in3


class ParseError(ValueError):
    """Malformed input bytes; the message points at the offending spot."""


def _load_json(data: bytes | str) -> Any:
    text = data.decode("utf-8") if isinstance(data, bytes) else data
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"invalid JSON at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None


def _require_int(value: Any, what: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ParseError(f"{what} must be an integer, got {value!r}")
    return value


def _graph_from(obj: Any, name: str) -> Graph:
    if not isinstance(obj, dict):
        raise ParseError(f'"{name}" must be an object with "n" and "edges"')
    n = _require_int(obj.get("n"), f'"{name}.n"')
    edges_obj = obj.get("edges", [])
    if not isinstance(edges_obj, list):
        raise ParseError(f'"{name}.edges" must be an array')
    edges = []
    for idx, pair in enumerate(edges_obj):
        if not (isinstance(pair, list) and len(pair) == 2):
            raise ParseError(f'"{name}.edges[{idx}]" must be a pair')
        u = _require_int(pair[0], f'"{name}.edges[{idx}][0]"')
        v = _require_int(pair[1], f'"{name}.edges[{idx}][1]"')
        edges.append((u, v))
    try:
        return Graph(n, edges)
    except InstanceError as exc:
        raise ParseError(f'in "{name}": {exc}') from None


def parse_instance(data: bytes | str) -> ListInstance:
    """Parse and validate an instance file; ListAut files (no "h") expand
    with h set to a copy of g."""
    obj = _load_json(data)
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object")
    if "g" not in obj:
        raise ParseError('missing required member "g"')
    g = _graph_from(obj["g"], "g")
    h = _graph_from(obj["h"], "h") if "h" in obj else Graph(g.n, g.edges())
    lists_obj = obj.get("lists")
    if not isinstance(lists_obj, list):
        raise ParseError('"lists" must be an array of arrays')
    lists = []
    for u, entries in enumerate(lists_obj):
        if not isinstance(entries, list):
            raise ParseError(f'"lists[{u}]" must be an array')
        lists.append([_require_int(w, f'"lists[{u}]" entry') for w in entries])
    try:
        return ListInstance(g, h, lists)
    except InstanceError as exc:
        raise ParseError(str(exc)) from None


def emit_instance(inst: ListInstance) -> str:
    """Canonical JSON for an instance; "h" is omitted when it equals g."""
    payload: dict[str, Any] = {"g": {"n": inst.g.n, "edges": [list(e) for e in inst.g.edges()]}}
    if inst.h != inst.g:
        payload["h"] = {"n": inst.h.n, "edges": [list(e) for e in inst.h.edges()]}
    payload["lists"] = [list(entries) for entries in inst.lists]
    return json.dumps(payload, separators=(",", ":")) + "\n"


def parse_formula(data: bytes | str) -> Cnf1in3:
    """Parse a 1-in-3 formula: {"vars": N, "clauses": [[q, r, s], ...]}."""
    obj = _load_json(data)
    if not isinstance(obj, dict):
        raise ParseError("top level must be a JSON object")
    nv = _require_int(obj.get("vars"), '"vars"')
    clauses_obj = obj.get("clauses", [])
    if not isinstance(clauses_obj, list):
        raise ParseError('"clauses" must be an array of triples')
    clauses = []
    for idx, triple in enumerate(clauses_obj):
        if not (isinstance(triple, list) and len(triple) == 3):
            raise ParseError(f'"clauses[{idx}]" must be a triple')
        clauses.append([_require_int(x, f'"clauses[{idx}]" entry') for x in triple])
    try:
        return Cnf1in3(nv, clauses)
    except InstanceError as exc:
        raise ParseError(str(exc)) from None


def emit_formula(f: Cnf1in3) -> str:
    payload = {"vars": f.var_count, "clauses": [list(c) for c in f.clauses]}
    return json.dumps(payload, separators=(",", ":")) + "\n"


def parse_mapping(data: bytes | str) -> tuple[int, ...]:
    """Parse a mapping file: any object with a "mapping" array, e.g. the
    output of a solve run."""
    obj = _load_json(data)
    if not isinstance(obj, dict) or "mapping" not in obj:
        raise ParseError('expected an object with a "mapping" array')
    entries = obj["mapping"]
    if not isinstance(entries, list):
        raise ParseError('"mapping" must be an array')
    return tuple(_require_int(x, '"mapping" entry') for x in entries)


def emit_result(result: SolveResult) -> tuple[str, int]:
    """Result JSON plus the matching process exit code (0 yes, 1 no)."""
    if result.is_yes:
        text = json.dumps(
            {"result": "yes", "mapping": list(result.mapping)}, separators=(",", ":")
        )
        return text + "\n", 0
    return json.dumps({"result": "no"}, separators=(",", ":")) + "\n", 1
