"""JSON (de)serialization of complexes, hypergraphs and construction specs."""
from __future__ import annotations

import json
import sys
from typing import Any

from .complex import SimplicialComplex, face, from_facets
from .errors import DomainError
from .glue import GluingTriple
from .hypergraph import Clutter, Hypergraph, check_covering_clutter

SCHEMA_VERSION = 1


class InputError(DomainError):
    """Malformed or inconsistent input document."""


def _labels(items: Any, what: str) -> list[str]:
    if not isinstance(items, list):
        raise InputError(f"{what} must be a list")
    out = []
    for x in items:
        if isinstance(x, bool) or not isinstance(x, (str, int)):
            raise InputError(f"{what} entries must be strings or integers, got {x!r}")
        out.append(str(x))
    return out


def _sets(items: Any, what: str) -> list[frozenset]:
    if not isinstance(items, list):
        raise InputError(f"{what} must be a list of lists")
    return [face(_labels(x, what)) for x in items]


def _require_object(obj: Any, what: str) -> dict:
    if not isinstance(obj, dict):
        raise InputError(f"{what} must be a JSON object")
    return obj


def complex_from_json(obj: Any) -> SimplicialComplex:
    obj = _require_object(obj, "complex")
    if "facets" not in obj:
        raise InputError("complex needs a 'facets' list")
    facets = _sets(obj["facets"], "facets")
    ground = _labels(obj["ground"], "ground") if "ground" in obj else frozenset().union(*facets)
    return from_facets(ground, facets)


def hypergraph_from_json(obj: Any, covering: bool = False, want_clutter: bool = False) -> Hypergraph:
    obj = _require_object(obj, "hypergraph")
    if "edges" not in obj:
        raise InputError("hypergraph needs an 'edges' list")
    edges = _sets(obj["edges"], "edges")
    ground = face(_labels(obj["ground"], "ground")) if "ground" in obj else frozenset().union(*edges)
    if any(not e for e in edges):
        raise InputError("edges must be nonempty")
    kind = obj.get("kind", "hypergraph")
    if kind not in ("hypergraph", "clutter"):
        raise InputError(f"unknown kind {kind!r}")
    if kind == "clutter" or want_clutter:
        h: Hypergraph = Clutter(ground, frozenset(edges))
        if covering:
            check_covering_clutter(h)
    else:
        h = Hypergraph(ground, frozenset(edges), bool(obj.get("has_empty_edge", False)))
    return h


def clutter_from_json(obj: Any, covering: bool = False) -> Clutter:
    return hypergraph_from_json(obj, covering, want_clutter=True)


def hybrid_spec_from_json(obj: Any, covering: bool = False) -> tuple[Hypergraph, list[GluingTriple], list[str] | None]:
    obj = _require_object(obj, "hybrid spec")
    central = hypergraph_from_json(obj.get("central"), covering)
    part = _require_object(obj.get("partition", {}), "partition")
    blocks = _sets(part.get("U", []), "partition U")
    rest = _labels(part["V"], "partition V") if "V" in part else None
    triples_raw = obj.get("triples", [])
    if not isinstance(triples_raw, list) or len(triples_raw) != len(blocks):
        raise InputError("need exactly one triple per block of the partition")
    triples = []
    for block, t in zip(blocks, triples_raw):
        t = _require_object(t, "triple")
        sizes = t.get("D")
        if not isinstance(sizes, list) or not all(isinstance(s, int) and not isinstance(s, bool) for s in sizes):
            raise InputError("triple 'D' must be a list of integers")
        triples.append(GluingTriple.of(block, sizes, hypergraph_from_json(t.get("component"), covering)))
    return central, triples, rest


def attach_spec_from_json(obj: Any, covering: bool = False) -> tuple[Clutter, dict[str, Clutter]]:
    obj = _require_object(obj, "glue spec")
    central = clutter_from_json(obj.get("central"), covering)
    attach = _require_object(obj.get("attach", {}), "attach")
    return central, {str(u): clutter_from_json(c, covering) for u, c in attach.items()}


def parse_json_text(text: str, source: str = "<input>") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def load_json(path: str) -> Any:
    if path == "-":
        return parse_json_text(sys.stdin.read(), "<stdin>")
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return parse_json_text(text, path)


def dumps(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
