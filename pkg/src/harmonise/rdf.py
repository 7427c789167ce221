"""In-memory RDF model: terms, triples, graphs and namespace bindings.

Graphs are values. Every operation that "changes" a graph returns a new
one, so graphs built by one template function can be handed to another
without defensive copying.
"""

import itertools
import re
import threading
from collections.abc import Mapping
from dataclasses import dataclass

from .errors import (
    BadPrefix,
    ConflictingQualifiers,
    HasBlankNodes,
    InvalidIri,
    InvalidTerm,
    UnboundPrefix,
)

__all__ = [
    "IRI",
    "Literal",
    "BlankNode",
    "Triple",
    "Graph",
    "NamespaceMap",
    "Namespace",
    "make_iri",
    "make_literal",
    "bnode",
    "bind",
    "expand",
    "graph_add",
    "graph_union",
    "graph_match",
    "graph_equal_ground",
]

_FORBIDDEN_IRI_CHARS = frozenset('<>"{}|^`\\')
_SCHEME_RE = re.compile(r"[A-Za-z][A-Za-z0-9+.\-]*")
_LANG_RE = re.compile(r"[A-Za-z]{1,8}(-[A-Za-z0-9]{1,8})*")
_BNODE_RE = re.compile(r"[A-Za-z0-9_]+")
_PREFIX_RE = re.compile(r"[A-Za-z](?:[A-Za-z0-9_.\-]*[A-Za-z0-9_\-])?")


def _check_iri(text):
    if not isinstance(text, str):
        raise InvalidIri(repr(text), 0, "IRI must be a string")
    if not text:
        raise InvalidIri(text, 0, "empty IRI")
    for i, ch in enumerate(text):
        if ch in _FORBIDDEN_IRI_CHARS or ch.isspace() or ord(ch) < 0x20:
            raise InvalidIri(text, i, f"forbidden character {ch!r}")
    colon = text.find(":")
    if colon <= 0:
        raise InvalidIri(text, 0, "missing scheme")
    if not _SCHEME_RE.fullmatch(text, 0, colon):
        raise InvalidIri(text, 0, f"malformed scheme {text[:colon]!r}")


def _escape_nt(text):
    # only the escapes N-Triples requires; everything else stays raw UTF-8
    if "\\" in text:
        text = text.replace("\\", "\\\\")
    if '"' in text:
        text = text.replace('"', '\\"')
    if "\n" in text:
        text = text.replace("\n", "\\n")
    if "\r" in text:
        text = text.replace("\r", "\\r")
    if "\t" in text:
        text = text.replace("\t", "\\t")
    return text


@dataclass(frozen=True, slots=True)
class IRI:
    """An absolute IRI, validated syntactically on construction."""

    value: str

    def __post_init__(self):
        _check_iri(self.value)

    def __str__(self):
        return self.value

    def n3(self):
        return f"<{self.value}>"


@dataclass(frozen=True, slots=True)
class Literal:
    """A literal whose lexical form is kept exactly as given.

    At most one of ``datatype`` and ``lang`` may be set. ``"4.6"`` and
    ``"4.60"`` are different literals even under the same numeric datatype.
    """

    lexical: str
    datatype: IRI | None = None
    lang: str | None = None

    def __post_init__(self):
        if not isinstance(self.lexical, str):
            raise InvalidTerm(f"literal lexical form must be a string, got {type(self.lexical).__name__}")
        if self.datatype is not None and self.lang is not None:
            raise ConflictingQualifiers(
                f"literal {self.lexical!r} has both datatype {self.datatype} and language {self.lang!r}"
            )
        if self.datatype is not None and not isinstance(self.datatype, IRI):
            raise InvalidTerm(f"literal datatype must be an IRI, got {self.datatype!r}")
        if self.lang is not None and not _LANG_RE.fullmatch(self.lang):
            raise InvalidTerm(f"malformed language tag {self.lang!r}")

    def __str__(self):
        return self.lexical

    def n3(self):
        body = f'"{_escape_nt(self.lexical)}"'
        if self.lang is not None:
            return f"{body}@{self.lang}"
        if self.datatype is not None:
            return f"{body}^^<{self.datatype.value}>"
        return body


@dataclass(frozen=True, slots=True)
class BlankNode:
    label: str

    def __post_init__(self):
        if not isinstance(self.label, str) or not _BNODE_RE.fullmatch(self.label):
            raise InvalidTerm(f"blank node label {self.label!r} must match [A-Za-z0-9_]+")

    def __str__(self):
        return f"_:{self.label}"

    def n3(self):
        return f"_:{self.label}"


_bnode_counter = itertools.count(1)
_bnode_lock = threading.Lock()


def bnode(label=None):
    """Return a blank node, auto-labelled ``b1``, ``b2``, ... when no label is given."""
    if label is None:
        with _bnode_lock:
            label = f"b{next(_bnode_counter)}"
    return BlankNode(label)


@dataclass(frozen=True, slots=True)
class Triple:
    subject: IRI | BlankNode
    predicate: IRI
    object: IRI | BlankNode | Literal

    def __post_init__(self):
        if not isinstance(self.subject, (IRI, BlankNode)):
            raise InvalidTerm(f"subject must be an IRI or blank node, got {self.subject!r}")
        if not isinstance(self.predicate, IRI):
            raise InvalidTerm(f"predicate must be an IRI, got {self.predicate!r}")
        if not isinstance(self.object, (IRI, BlankNode, Literal)):
            raise InvalidTerm(f"object must be an RDF term, got {self.object!r}")

    def __iter__(self):
        yield self.subject
        yield self.predicate
        yield self.object

    def n3(self):
        return f"{self.subject.n3()} {self.predicate.n3()} {self.object.n3()} ."

    def is_ground(self):
        return not (isinstance(self.subject, BlankNode) or isinstance(self.object, BlankNode))


def make_iri(text):
    return IRI(text)


def make_literal(lexical, datatype=None, lang=None):
    return Literal(lexical, datatype, lang)


def _as_triple(t):
    if isinstance(t, Triple):
        return t
    return Triple(*t)


class Graph:
    """An immutable set of triples.

    Accepts ``Triple`` objects or plain ``(s, p, o)`` tuples. ``a + b`` and
    ``a | b`` both return the union.
    """

    __slots__ = ("_triples", "_index")

    def __init__(self, triples=()):
        if isinstance(triples, Graph):
            self._triples = triples._triples
        else:
            self._triples = frozenset(_as_triple(t) for t in triples)
        self._index = None

    @classmethod
    def _wrap(cls, triples):
        g = cls.__new__(cls)
        g._triples = triples
        g._index = None
        return g

    @classmethod
    def union_all(cls, graphs):
        """Union of any number of graphs in one pass."""
        acc = set()
        for g in graphs:
            acc.update(g._triples)
        return cls._wrap(frozenset(acc))

    def __len__(self):
        return len(self._triples)

    def __iter__(self):
        return iter(self._triples)

    def __contains__(self, t):
        return _as_triple(t) in self._triples

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._triples == other._triples

    def __hash__(self):
        return hash(self._triples)

    def __add__(self, other):
        return graph_union(self, other)

    __or__ = __add__

    def __repr__(self):
        return f"<Graph with {len(self)} triples>"

    @property
    def triples(self):
        return self._triples

    def is_ground(self):
        return all(t.is_ground() for t in self._triples)

    def add(self, t):
        """Return a new graph that also contains ``t``."""
        return graph_add(self, t)

    def match(self, s=None, p=None, o=None):
        return graph_match(self, s, p, o)

    def objects(self, s=None, p=None):
        return [t.object for t in graph_match(self, s, p, None)]

    def subjects(self, p=None, o=None):
        return list(dict.fromkeys(t.subject for t in graph_match(self, None, p, o)))

    def _get_index(self):
        # built lazily; invisible to callers because the triple set never changes
        if self._index is None:
            by_s, by_p, by_o = {}, {}, {}
            for t in self._triples:
                by_s.setdefault(t.subject, []).append(t)
                by_p.setdefault(t.predicate, []).append(t)
                by_o.setdefault(t.object, []).append(t)
            self._index = (by_s, by_p, by_o)
        return self._index


def graph_add(g, t):
    t = _as_triple(t)
    if t in g._triples:
        return g
    return Graph._wrap(g._triples | {t})


def graph_union(a, b):
    if not b._triples:
        return a
    if not a._triples:
        return b
    return Graph._wrap(a._triples | b._triples)


def graph_match(g, s=None, p=None, o=None):
    """Triples matching the given positions (``None`` is a wildcard).

    Results are ordered by their N-Triples rendering.
    """
    if s is None and p is None and o is None:
        candidates = g._triples
    else:
        by_s, by_p, by_o = g._get_index()
        pools = []
        if s is not None:
            pools.append(by_s.get(s, ()))
        if p is not None:
            pools.append(by_p.get(p, ()))
        if o is not None:
            pools.append(by_o.get(o, ()))
        pool = min(pools, key=len)
        candidates = [
            t for t in pool
            if (s is None or t.subject == s)
            and (p is None or t.predicate == p)
            and (o is None or t.object == o)
        ]
    return sorted(candidates, key=Triple.n3)


def graph_equal_ground(a, b):
    """Set equality of two graphs that contain no blank nodes."""
    for name, g in (("left", a), ("right", b)):
        if not g.is_ground():
            raise HasBlankNodes(f"{name} graph contains blank nodes; ground comparison is undefined")
    return a._triples == b._triples


class NamespaceMap(Mapping):
    """Immutable prefix -> base IRI bindings.

    The empty string is the default prefix (``:local`` in Turtle).
    """

    __slots__ = ("_bindings",)

    def __init__(self, bindings=None):
        self._bindings = {}
        for prefix, base in (bindings or {}).items():
            self._bindings[_check_prefix(prefix)] = base if isinstance(base, IRI) else IRI(str(base))

    def __getitem__(self, prefix):
        return self._bindings[prefix]

    def __iter__(self):
        return iter(self._bindings)

    def __len__(self):
        return len(self._bindings)

    def __repr__(self):
        return f"NamespaceMap({ {k: v.value for k, v in self._bindings.items()} })"

    def bind(self, prefix, base):
        return bind(self, prefix, base)

    def expand(self, curie):
        return expand(self, curie)

    def compact(self, iri, local_ok=None):
        """Return ``(prefix, local)`` for the longest base that prefixes ``iri``, or None.

        ``local_ok`` is an optional predicate the remainder must satisfy.
        """
        best = None
        for prefix, base in self._bindings.items():
            b = base.value
            if iri.value.startswith(b) and (best is None or len(b) > len(best[1])):
                local = iri.value[len(b):]
                if local_ok is None or local_ok(local):
                    best = (prefix, b, local)
        if best is None:
            return None
        return best[0], best[2]


def _check_prefix(prefix):
    if not isinstance(prefix, str) or (prefix and not _PREFIX_RE.fullmatch(prefix)):
        raise BadPrefix(f"illegal prefix {prefix!r}")
    return prefix


def bind(ns, prefix, base):
    _check_prefix(prefix)
    if not isinstance(base, IRI):
        base = IRI(str(base))
    merged = dict(ns._bindings)
    merged[prefix] = base
    out = NamespaceMap.__new__(NamespaceMap)
    out._bindings = merged
    return out


def expand(ns, curie):
    prefix, sep, local = curie.partition(":")
    if not sep:
        raise InvalidIri(curie, 0, "not a CURIE (no ':')")
    if prefix not in ns._bindings:
        raise UnboundPrefix(prefix)
    return IRI(ns._bindings[prefix].value + local)


class Namespace:
    """Attribute/item access to IRIs under a base, e.g. ``SOSA.Observation``."""

    __slots__ = ("base",)

    def __init__(self, base):
        object.__setattr__(self, "base", base if isinstance(base, IRI) else IRI(base))

    def __getitem__(self, local):
        return IRI(self.base.value + local)

    def __getattr__(self, local):
        if local.startswith("__"):
            raise AttributeError(local)
        return self[local]

    def __setattr__(self, name, value):
        raise AttributeError("Namespace is immutable")

    def __repr__(self):
        return f"Namespace({self.base.value!r})"
