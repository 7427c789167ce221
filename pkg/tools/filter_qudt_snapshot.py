"""Cut a full QUDT unit release down to the subset the Turtle reader accepts.

    python tools/filter_qudt_snapshot.py VOCAB_UNIT.ttl out.ttl [DEG_C M-PER-SEC ...]

Keeps, for every qudt:Unit (or only the listed local names), the rdf:type
triple and its rdfs:label literals. Everything else in the release, which
uses blank-node property lists and collections freely, is dropped. Needs
rdflib, which is only a test/dev dependency.
"""

import sys

import rdflib
from rdflib.namespace import RDF, RDFS

from harmonise import IRI, Graph, Literal, NamespaceMap, Triple, to_turtle

QUDT = rdflib.Namespace("http://qudt.org/schema/qudt/")
UNIT = "http://qudt.org/vocab/unit/"

NS = NamespaceMap({
    "qudt": "http://qudt.org/schema/qudt/",
    "rdfs": "http://www.w3.org/2000/01/rdf-schema#",
    "unit": UNIT,
})


def _literal(lit):
    dt = IRI(str(lit.datatype)) if lit.datatype is not None else None
    return Literal(str(lit), dt, lit.language)


def filter_units(source, keep=None):
    out = []
    for u in sorted(source.subjects(RDF.type, QUDT.Unit)):
        if not isinstance(u, rdflib.URIRef) or not str(u).startswith(UNIT):
            continue
        if keep and str(u)[len(UNIT):] not in keep:
            continue
        s = IRI(str(u))
        out.append(Triple(s, IRI(str(RDF.type)), IRI(str(QUDT.Unit))))
        for label in source.objects(u, RDFS.label):
            if isinstance(label, rdflib.Literal):
                out.append(Triple(s, IRI(str(RDFS.label)), _literal(label)))
    return Graph(out)


def main(argv):
    if len(argv) < 2:
        print(__doc__.strip(), file=sys.stderr)
        return 2
    src, dst, *keep = argv
    source = rdflib.Graph()
    source.parse(src, format="turtle")
    g = filter_units(source, set(keep))
    with open(dst, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(to_turtle(g, NS))
    print(f"{len(g)} triples written to {dst}")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
