"""Structural checks of harmonised graphs against the observation patterns."""

from dataclasses import dataclass

from .rdf import Literal
from .vocab import (
    QUDT_HAS_UNIT,
    QUDT_NUMERIC_VALUE,
    QUDT_QUANTITY_VALUE,
    RDF_TYPE,
    SOSA_HAS_FEATURE_OF_INTEREST,
    SOSA_HAS_RESULT,
    SOSA_OBSERVATION,
    SOSA_OBSERVED_PROPERTY,
    SOSA_RESULT_TIME,
    STANDARD_PREFIXES,
    XSD_DATETIME,
)

__all__ = ["Violation", "lint_graph"]

# class -> predicates that must occur exactly once on each instance
CARDINALITY_RULES = {
    SOSA_OBSERVATION: (
        SOSA_HAS_RESULT,
        SOSA_OBSERVED_PROPERTY,
        SOSA_RESULT_TIME,
        SOSA_HAS_FEATURE_OF_INTEREST,
    ),
    QUDT_QUANTITY_VALUE: (QUDT_NUMERIC_VALUE, QUDT_HAS_UNIT),
}


def _curie(iri):
    hit = STANDARD_PREFIXES.compact(iri)
    return f"{hit[0]}:{hit[1]}" if hit else iri.n3()


@dataclass(frozen=True)
class Violation:
    subject: object
    predicate: object
    message: str

    def __str__(self):
        return f"{self.subject.n3()} {_curie(self.predicate)}: {self.message}"


def lint_graph(g):
    """Every cardinality violation in ``g``, ordered by subject then predicate."""
    out = []
    for cls, preds in CARDINALITY_RULES.items():
        for s in g.subjects(RDF_TYPE, cls):
            for p in preds:
                objs = g.objects(s, p)
                if len(objs) != 1:
                    out.append(Violation(s, p, f"{_curie(cls)} needs exactly 1 {_curie(p)}, found {len(objs)}"))
                elif p == SOSA_RESULT_TIME and not (
                    isinstance(objs[0], Literal) and objs[0].datatype == XSD_DATETIME
                ):
                    out.append(Violation(s, p, f"{_curie(p)} must be an xsd:dateTime literal, found {objs[0].n3()}"))
    out.sort(key=lambda v: (v.subject.n3(), v.predicate.n3()))
    return out
