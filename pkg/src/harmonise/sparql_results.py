"""Readers for SPARQL SELECT results saved to disk (JSON and CSV formats)."""

import csv
import io
import json
from dataclasses import dataclass, field

from .errors import InvalidIri, InvalidTerm, MalformedResults
from .rdf import IRI, BlankNode, Literal

__all__ = ["ResultSet", "parse_sparql_results_json", "parse_sparql_results_csv"]


@dataclass
class ResultSet:
    vars: list
    rows: list = field(default_factory=list)

    def __len__(self):
        return len(self.rows)

    def __iter__(self):
        return iter(self.rows)


def _term(node, path):
    if not isinstance(node, dict):
        raise MalformedResults(path, "binding must be an object")
    kind = node.get("type")
    if "value" not in node:
        raise MalformedResults(f"{path}.value", "missing")
    value = node["value"]
    if not isinstance(value, str):
        raise MalformedResults(f"{path}.value", "must be a string")
    try:
        if kind == "uri":
            return IRI(value)
        if kind == "literal":
            dt = node.get("datatype")
            lang = node.get("xml:lang")
            if dt is not None and lang is not None:
                raise MalformedResults(path, "literal has both datatype and xml:lang")
            if dt is not None:
                try:
                    dt = IRI(dt)
                except (InvalidIri, TypeError) as e:
                    raise MalformedResults(f"{path}.datatype", str(e)) from None
            return Literal(value, dt, lang)
        if kind == "bnode":
            return BlankNode(value)
    except (InvalidIri, InvalidTerm) as e:
        raise MalformedResults(f"{path}.value", str(e)) from None
    raise MalformedResults(f"{path}.type", f"expected 'uri', 'literal' or 'bnode', got {kind!r}")


def parse_sparql_results_json(text):
    """Parse the W3C SPARQL 1.1 Query Results JSON format.

    Errors name the JSON path of the first violation, e.g.
    ``$.results.bindings[2].unit.value``.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise MalformedResults("$", f"not valid JSON: {e}") from None
    if not isinstance(doc, dict):
        raise MalformedResults("$", "top level must be an object")
    head = doc.get("head")
    if not isinstance(head, dict):
        raise MalformedResults("$.head", "missing or not an object")
    variables = head.get("vars")
    if not isinstance(variables, list) or not all(isinstance(v, str) for v in variables):
        raise MalformedResults("$.head.vars", "must be a list of strings")
    results = doc.get("results")
    if not isinstance(results, dict):
        raise MalformedResults("$.results", "missing or not an object")
    bindings = results.get("bindings")
    if not isinstance(bindings, list):
        raise MalformedResults("$.results.bindings", "must be a list")

    known = set(variables)
    rows = []
    for i, b in enumerate(bindings):
        path = f"$.results.bindings[{i}]"
        if not isinstance(b, dict):
            raise MalformedResults(path, "must be an object")
        row = {}
        for name, node in b.items():
            if name not in known:
                raise MalformedResults(f"{path}.{name}", "variable not declared in head.vars")
            row[name] = _term(node, f"{path}.{name}")
        rows.append(row)
    return ResultSet(list(variables), rows)


def parse_sparql_results_csv(text):
    """Parse SPARQL CSV results.

    CSV carries no term types, so every non-empty cell becomes a plain
    literal and empty cells are left unbound.
    """
    reader = csv.reader(io.StringIO(text, newline=""))
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedResults("row 1", "missing header row") from None
    except csv.Error as e:
        raise MalformedResults("row 1", str(e)) from None
    variables = [h.strip() for h in header]
    rows = []
    try:
        for n, cells in enumerate(reader, start=2):
            if not cells:
                continue
            if len(cells) != len(variables):
                raise MalformedResults(f"row {n}", f"expected {len(variables)} cells, found {len(cells)}")
            rows.append({v: Literal(c) for v, c in zip(variables, cells) if c != ""})
    except csv.Error as e:
        raise MalformedResults(f"row {reader.line_num}", str(e)) from None
    return ResultSet(variables, rows)
