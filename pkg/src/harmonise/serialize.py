"""Deterministic RDF writers.

``to_ntriples_canonical`` is the byte-exact form used for golden files;
``to_turtle`` is the prefixed, grouped form meant for people.
"""

import re
from dataclasses import dataclass, field

from .rdf import IRI, BlankNode, Literal, NamespaceMap, _escape_nt
from .vocab import RDF_TYPE

__all__ = [
    "SerializationOptions",
    "escape_ntriples_literal",
    "to_ntriples_canonical",
    "to_turtle",
    "serialize",
]

FORMATS = ("ntriples-canonical", "turtle")

# Conservative ASCII subset of the Turtle PN_LOCAL production; anything else
# is written as <...>.
_LOCAL_RE = re.compile(r"[A-Za-z0-9_](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?")


@dataclass(frozen=True)
class SerializationOptions:
    format: str = "ntriples-canonical"
    namespaces: NamespaceMap = field(default_factory=NamespaceMap)

    def __post_init__(self):
        if self.format not in FORMATS:
            raise ValueError(f"unknown output format {self.format!r}; expected one of {FORMATS}")
        if self.namespaces is None:
            raise ValueError("turtle output needs a namespace map (it may be empty)")


def escape_ntriples_literal(text):
    r"""Apply the five escapes N-Triples requires (``\\ \" \n \r \t``)."""
    return _escape_nt(text)


def to_ntriples_canonical(g):
    # Python orders str by code point, which is the same order as the UTF-8 bytes.
    lines = sorted(t.n3() for t in g)
    if not lines:
        return ""
    return "\n".join(lines) + "\n"


class _TurtleWriter:
    def __init__(self, ns):
        self.ns = ns
        self.used = set()

    def iri(self, iri):
        hit = self.ns.compact(iri, _LOCAL_RE.fullmatch)
        if hit is None:
            return iri.n3()
        prefix, local = hit
        self.used.add(prefix)
        return f"{prefix}:{local}"

    def term(self, t):
        if isinstance(t, IRI):
            return self.iri(t)
        if isinstance(t, BlankNode):
            return t.n3()
        if isinstance(t, Literal):
            body = f'"{_escape_nt(t.lexical)}"'
            if t.lang is not None:
                return f"{body}@{t.lang}"
            if t.datatype is not None:
                return f"{body}^^{self.iri(t.datatype)}"
            return body
        raise TypeError(f"not an RDF term: {t!r}")

    def predicate(self, p):
        return "a" if p == RDF_TYPE else self.iri(p)


def to_turtle(g, ns=None):
    """Serialize ``g`` as Turtle using the prefixes in ``ns``.

    Subject blocks appear in N-Triples order of the subject; within a block
    ``rdf:type`` comes first, then predicates in N-Triples order. Only plain
    ``_:label`` blank nodes are written, never ``[ ]`` or collections.
    """
    ns = ns if ns is not None else NamespaceMap()
    if not len(g):
        return ""
    w = _TurtleWriter(ns)

    by_subject = {}
    for t in g:
        by_subject.setdefault(t.subject, {}).setdefault(t.predicate, []).append(t.object)

    blocks = []
    for subject in sorted(by_subject, key=lambda s: s.n3()):
        preds = by_subject[subject]
        order = sorted(preds, key=lambda p: (p != RDF_TYPE, p.n3()))
        parts = []
        for p in order:
            objs = ", ".join(w.term(o) for o in sorted(preds[p], key=lambda o: o.n3()))
            parts.append(f"{w.predicate(p)} {objs}")
        blocks.append(f"{w.term(subject)} " + ";\n  ".join(parts) + " .\n")

    header = "".join(f"@prefix {p}: <{ns[p].value}> .\n" for p in sorted(w.used))
    if header:
        header += "\n"
    return header + "\n".join(blocks)


def serialize(g, options):
    if options.format == "turtle":
        return to_turtle(g, options.namespaces)
    return to_ntriples_canonical(g)
