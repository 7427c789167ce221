"""Generate vocabulary accessor catalogs from vocabulary data.

The pipeline is: vocabulary snapshot (Turtle) or saved SPARQL results ->
:func:`extract_vocab_entries` -> :func:`generate_catalog`, which mangles a
stable accessor name per entry, renders a source block per entry from a
substitution template and writes a tab-separated manifest. At runtime the
manifest, loaded with :func:`load_catalog`, is what accessors resolve
against.
"""

import difflib
import logging
import re
import unicodedata
from dataclasses import dataclass

from .errors import MalformedManifest, UnknownAccessor, UnknownPlaceholder, UnmanglableName
from .rdf import IRI, Graph, Literal
from .sparql_results import ResultSet
from .vocab import QUDT_QUANTITY_KIND_CLASS, QUDT_UNIT_CLASS, RDF_TYPE, RDFS_LABEL, SOSA_OBSERVABLE_PROPERTY

__all__ = [
    "KINDS",
    "VocabEntry",
    "Catalog",
    "ExtractionProblem",
    "slugify",
    "mangle_accessor_name",
    "assign_accessor_names",
    "extract_vocab_entries",
    "render_template",
    "generate_catalog",
    "load_catalog",
    "unit_accessor",
    "DEFAULT_UNIT_TEMPLATE",
]

log = logging.getLogger(__name__)

KINDS = ("unit", "quantity_kind", "observable_property")

# class each kind is typed with in a vocabulary graph
KIND_CLASS = {
    "unit": QUDT_UNIT_CLASS,
    "quantity_kind": QUDT_QUANTITY_KIND_CLASS,
    "observable_property": SOSA_OBSERVABLE_PROPERTY,
}

# result-set variable carrying the term IRI, per kind
KIND_VARIABLE = {
    "unit": "unit",
    "quantity_kind": "quantity_kind",
    "observable_property": "property",
}

# name of the namespace object the generated source indexes into
KIND_NAMESPACE = {
    "unit": "QUDT_UNIT",
    "quantity_kind": "QUDT_QUANTITYKIND",
    "observable_property": "OBSERVABLE_PROPERTY",
}

SYMBOL_FOLDS = {
    "\u2126": "ohm",  # OHM SIGN
    "\u03a9": "ohm",  # GREEK CAPITAL LETTER OMEGA
    "\u00b0": "deg",  # DEGREE SIGN
    "\u00b5": "micro",  # MICRO SIGN
    "\u03bc": "micro",  # GREEK SMALL LETTER MU
    "%": "percent",
    "\u2030": "permille",  # PER MILLE SIGN
}

DEFAULT_UNIT_TEMPLATE = '''def {{ func.name }}() -> {{ func.return_type }}:
    """Returns the IRI for QUDT unit: {{ func.label }}"""
    return {{ func.namespace }}["{{ func.constant }}"]
'''

_PLACEHOLDER_RE = re.compile(r"\{\{\s*([A-Za-z_][A-Za-z0-9_]*(?:\.[A-Za-z_][A-Za-z0-9_]*)*)\s*\}\}")
_NON_ALNUM_RE = re.compile(r"[^a-z0-9]+")


@dataclass(frozen=True)
class VocabEntry:
    local: str
    label: str
    iri: IRI

    def __post_init__(self):
        if not self.local:
            raise ValueError("vocabulary entry needs a non-empty local name")
        if not self.iri.value.endswith(self.local):
            raise ValueError(f"IRI {self.iri.value} does not end with local name {self.local!r}")
        if any(c in self.label for c in "\t\r\n"):
            raise ValueError(f"label {self.label!r} contains a tab or line break")


@dataclass(frozen=True)
class ExtractionProblem:
    """An entry skipped during extraction (``reason`` is MissingLabel or MissingVariable)."""

    reason: str
    subject: str
    detail: str


def slugify(text):
    """Lowercase ASCII slug: fold known symbols, strip diacritics, ``_``-join words."""
    for sym, word in SYMBOL_FOLDS.items():
        if sym in text:
            text = text.replace(sym, f" {word} ")
    text = unicodedata.normalize("NFKD", text)
    text = text.encode("ascii", "ignore").decode("ascii").lower()
    return _NON_ALNUM_RE.sub("_", text).strip("_")


def _check_kind(kind):
    if kind not in KINDS:
        raise ValueError(f"unknown vocabulary kind {kind!r}; expected one of {KINDS}")


def mangle_accessor_name(kind, label, local):
    """Accessor name for one entry, before collision suffixing."""
    _check_kind(kind)
    source = label if label else local
    if not source:
        raise UnmanglableName("entry has neither label nor local name")
    slug = slugify(source)
    if not slug:
        raise UnmanglableName(f"{source!r} has no ASCII letters or digits after folding")
    return f"get_qudt_{kind}_{slug}"


def assign_accessor_names(entries, kind):
    """Mangle every entry and make the names unique.

    Entries are processed in IRI order, so the result does not depend on
    input order. A name already taken gets ``_2``, ``_3``, ... appended.
    Returns a dict ``name -> VocabEntry`` sorted by name.
    """
    ordered = sorted(entries, key=lambda e: (e.iri.value, e.label, e.local))
    bases = [mangle_accessor_name(kind, e.label, e.local) for e in ordered]
    natural = set(bases)
    taken = {}
    for base, entry in zip(bases, ordered):
        name = base
        if name in taken:
            n = 2
            while f"{base}_{n}" in taken or f"{base}_{n}" in natural:
                n += 1
            name = f"{base}_{n}"
        taken[name] = entry
    return dict(sorted(taken.items()))


def _local_name(iri):
    v = iri.value
    cut = max(v.rfind("/"), v.rfind("#"))
    return v[cut + 1:]


def _label_rank(lit):
    lang = (lit.lang or "").lower()
    if lang == "en":
        rank = 0
    elif lang.startswith("en-"):
        rank = 1
    else:
        rank = 2
    return rank, lit.lexical, lang


def _pick_label(labels):
    return " ".join(min(labels, key=_label_rank).lexical.split())


def _as_iri(term):
    if isinstance(term, IRI):
        return term
    # CSV results carry IRIs as plain text
    if isinstance(term, Literal):
        try:
            return IRI(term.lexical)
        except ValueError:
            return None
    return None


def extract_vocab_entries(source, kind="unit", problems=None):
    """Vocabulary entries from a graph or a SELECT result set.

    From a graph, every subject typed with the kind's class (``qudt:Unit``
    for units) and carrying an ``rdfs:label`` yields one entry. From a
    result set, the kind's variable (``unit`` for units) and ``label`` are
    read row by row. When a term has several labels the English one wins,
    then the lexically smallest.

    Terms that cannot be turned into entries are skipped; each skip is
    logged and, if ``problems`` is a list, appended to it as an
    :class:`ExtractionProblem`. The result is sorted by accessor name.
    """
    _check_kind(kind)
    labels = {}
    skipped = []

    if isinstance(source, Graph):
        for t in source.match(None, RDF_TYPE, KIND_CLASS[kind]):
            if not isinstance(t.subject, IRI):
                skipped.append(ExtractionProblem("MissingVariable", t.subject.n3(), "blank-node term has no IRI"))
                continue
            found = [o for o in source.objects(t.subject, RDFS_LABEL) if isinstance(o, Literal)]
            labels[t.subject] = found
    elif isinstance(source, ResultSet):
        var = KIND_VARIABLE[kind]
        if var not in source.vars or "label" not in source.vars:
            missing = [v for v in (var, "label") if v not in source.vars]
            skipped.append(ExtractionProblem("MissingVariable", "head", f"result set lacks {missing}"))
        else:
            for i, row in enumerate(source.rows):
                iri = _as_iri(row.get(var)) if var in row else None
                if iri is None:
                    skipped.append(ExtractionProblem("MissingVariable", f"row {i + 1}", f"no IRI bound to ?{var}"))
                    continue
                found = labels.setdefault(iri, [])
                lab = row.get("label")
                if isinstance(lab, Literal):
                    found.append(lab)
    else:
        raise TypeError(f"expected a Graph or ResultSet, got {type(source).__name__}")

    entries = []
    for iri, found in labels.items():
        local = _local_name(iri)
        if not found:
            skipped.append(ExtractionProblem("MissingLabel", iri.value, "no rdfs:label"))
            continue
        if not local:
            skipped.append(ExtractionProblem("MissingVariable", iri.value, "IRI has an empty local name"))
            continue
        entries.append(VocabEntry(local, _pick_label(found), iri))

    for p in skipped:
        log.warning("skipping vocabulary term %s: %s (%s)", p.subject, p.reason, p.detail)
    if problems is not None:
        problems.extend(skipped)
    return list(assign_accessor_names(entries, kind).values())


def render_template(template_text, ctx):
    """Replace each ``{{ dotted.path }}`` with ``ctx[dotted.path]``."""

    def sub(m):
        path = m.group(1)
        if path not in ctx:
            raise UnknownPlaceholder(path, m.start())
        return str(ctx[path])

    return _PLACEHOLDER_RE.sub(sub, template_text)


@dataclass(frozen=True)
class Catalog:
    """Accessor name -> vocabulary entry, sorted by name."""

    kind: str
    entries: dict

    def __post_init__(self):
        _check_kind(self.kind)
        object.__setattr__(self, "entries", dict(sorted(self.entries.items())))
        object.__setattr__(self, "_iris", frozenset(e.iri for e in self.entries.values()))

    def __len__(self):
        return len(self.entries)

    def __contains__(self, name):
        return name in self.entries

    def __iter__(self):
        return iter(self.entries)

    @property
    def names(self):
        return list(self.entries)

    def has_iri(self, iri):
        return iri in self._iris

    def resolve(self, name):
        return unit_accessor(self, name)

    def manifest(self):
        return "".join(f"{name}\t{e.iri.value}\t{e.label}\n" for name, e in self.entries.items())


def unit_accessor(catalog, name):
    """IRI behind a generated accessor name.

    Unknown names raise :class:`UnknownAccessor` carrying the closest
    known name, if any is reasonably close.
    """
    try:
        return catalog.entries[name].iri
    except KeyError:
        close = difflib.get_close_matches(name, catalog.entries.keys(), n=1, cutoff=0.8)
        raise UnknownAccessor(name, close[0] if close else None) from None


def _context(name, entry, kind, namespace, return_type):
    return {
        "func.name": name,
        "func.return_type": return_type,
        "func.namespace": namespace,
        "func.constant": entry.local,
        "func.label": entry.label,
        "func.iri": entry.iri.value,
        "func.kind": kind,
    }


def generate_catalog(entries, template_text=DEFAULT_UNIT_TEMPLATE, kind="unit", namespace=None, return_type="IRI"):
    """Build ``(catalog, manifest_text, source_text)`` from vocabulary entries.

    Output is a pure function of the inputs: entries are named and sorted
    independently of the order they are given in.
    """
    _check_kind(kind)
    namespace = namespace or KIND_NAMESPACE[kind]
    named = assign_accessor_names(entries, kind)
    catalog = Catalog(kind, named)
    blocks = [
        render_template(template_text, _context(name, e, kind, namespace, return_type)).rstrip("\n")
        for name, e in catalog.entries.items()
    ]
    source = "\n\n".join(blocks) + "\n" if blocks else ""
    return catalog, catalog.manifest(), source


def load_catalog(manifest_text, kind=None):
    """Parse a manifest back into a :class:`Catalog`.

    The kind is read off the ``get_qudt_<kind>_`` name prefix unless given.
    """
    entries = {}
    seen_kinds = set()
    if manifest_text and not manifest_text.endswith("\n"):
        raise MalformedManifest(manifest_text.count("\n") + 1, "missing trailing newline")
    previous = None
    for n, line in enumerate(manifest_text.splitlines(), start=1):
        parts = line.split("\t")
        if len(parts) != 3:
            raise MalformedManifest(n, f"expected 3 tab-separated fields, found {len(parts)}")
        name, iri_text, label = parts
        if name in entries:
            raise MalformedManifest(n, f"duplicate accessor name {name!r}")
        if previous is not None and name < previous:
            raise MalformedManifest(n, f"{name!r} is out of order")
        previous = name
        line_kind = next((k for k in KINDS if name.startswith(f"get_qudt_{k}_")), None)
        if line_kind is None:
            raise MalformedManifest(n, f"{name!r} is not a generated accessor name")
        seen_kinds.add(line_kind)
        try:
            iri = IRI(iri_text)
            entries[name] = VocabEntry(_local_name(iri), label, iri)
        except ValueError as e:
            raise MalformedManifest(n, str(e)) from None
    if kind is None:
        if len(seen_kinds) > 1:
            raise MalformedManifest(0, f"manifest mixes kinds {sorted(seen_kinds)}")
        kind = seen_kinds.pop() if seen_kinds else "unit"
    elif seen_kinds - {kind}:
        raise MalformedManifest(0, f"manifest holds {sorted(seen_kinds)} entries, expected {kind!r}")
    return Catalog(kind, entries)
