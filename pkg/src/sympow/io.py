"""JSON file formats and canonical serialization.

Three input formats:

    ideal    {"variables": ["x","y","z"], "generators": [[1,1,0],[0,1,1]]}
    graph    {"vertices": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[4,0]]}
    complex  {"vertices": 7, "facets": [[0,1,2], [2,3,4]]}

Ideal generators are exponent vectors over the declared variables; negative
entries and ragged rows are rejected.  All output documents are serialized
with sorted keys and two-space indentation so that identical inputs yield
byte-identical output.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .complexes import SimplicialComplex
from .errors import InputError
from .graphs import Graph
from .monomials import MonomialIdeal


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _load_json(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_ideal(path: str) -> tuple[MonomialIdeal, list[str]]:
    """Parse an ideal file; returns the ideal and its variable names."""
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    variables = doc.get("variables")
    generators = doc.get("generators")
    if not isinstance(variables, list) or not variables:
        raise InputError(f"{path}: 'variables' must be a nonempty list")
    if any(not isinstance(v, str) for v in variables):
        raise InputError(f"{path}: variable names must be strings")
    if len(set(variables)) != len(variables):
        raise InputError(f"{path}: variable names must be distinct")
    if not isinstance(generators, list):
        raise InputError(f"{path}: 'generators' must be a list")
    n = len(variables)
    rows = []
    for row in generators:
        if not isinstance(row, list) or len(row) != n:
            raise InputError(f"{path}: generator {row!r} is not a length-{n} row")
        if any(not isinstance(e, int) or isinstance(e, bool) or e < 0 for e in row):
            raise InputError(f"{path}: generator {row!r} has a non-integer or negative entry")
        rows.append(tuple(row))
    try:
        ideal = MonomialIdeal.from_generators(n, rows)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc
    return ideal, list(variables)


def load_graph(path: str) -> Graph:
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    vertices = doc.get("vertices")
    edges = doc.get("edges")
    if not isinstance(vertices, int) or isinstance(vertices, bool) or vertices < 1:
        raise InputError(f"{path}: 'vertices' must be a positive integer")
    if not isinstance(edges, list):
        raise InputError(f"{path}: 'edges' must be a list")
    pairs = []
    for edge in edges:
        if (
            not isinstance(edge, list)
            or len(edge) != 2
            or any(not isinstance(v, int) or isinstance(v, bool) for v in edge)
        ):
            raise InputError(f"{path}: edge {edge!r} is not a pair of integers")
        pairs.append((edge[0], edge[1]))
    try:
        return Graph.from_edges(vertices, pairs)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def load_complex(path: str) -> SimplicialComplex:
    doc = _load_json(path)
    if not isinstance(doc, dict):
        raise InputError(f"{path}: expected a JSON object")
    vertices = doc.get("vertices")
    facets = doc.get("facets")
    if not isinstance(vertices, int) or isinstance(vertices, bool) or vertices < 1:
        raise InputError(f"{path}: 'vertices' must be a positive integer")
    if not isinstance(facets, list):
        raise InputError(f"{path}: 'facets' must be a list")
    cleaned = []
    for facet in facets:
        if not isinstance(facet, list) or any(
            not isinstance(v, int) or isinstance(v, bool) for v in facet
        ):
            raise InputError(f"{path}: facet {facet!r} is not a list of integers")
        cleaned.append(tuple(facet))
    try:
        return SimplicialComplex.from_faces(vertices, cleaned)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from exc


def ideal_payload(ideal: MonomialIdeal, variables: list[str] | None = None) -> dict:
    """JSON document for an ideal, reusing the caller's variable names."""
    if variables is None:
        variables = [f"x{i}" for i in range(ideal.num_vars)]
    if len(variables) != ideal.num_vars:
        raise ValueError("variable name list does not match the ideal")
    return {
        "variables": list(variables),
        "generators": [list(g.exponents) for g in ideal.generators],
    }


def complex_payload(complex_: SimplicialComplex) -> dict:
    return {
        "vertices": complex_.num_vertices,
        "facets": [list(f) for f in complex_.facets],
    }


def fraction_payload(value: Fraction) -> dict:
    return {"num": value.numerator, "den": value.denominator}
