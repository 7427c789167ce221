"""Harmonise environmental observation records into SOSA/QUDT RDF.

The toolkit has three layers of template functions (see
:mod:`harmonise.patterns`), an RDF model with deterministic writers and a
Turtle reader, and a generator that builds vocabulary accessor catalogs
from QUDT data.
"""

from .codegen import Catalog, VocabEntry, extract_vocab_entries, generate_catalog, load_catalog, unit_accessor
from .patterns import (
    IriPolicy,
    ObservationRecord,
    PropertySpec,
    build_harmonisers,
    create_quantity_value_result,
    create_sosa_observation,
    harmonise_observation,
    named_harmoniser,
)
from .rdf import (
    IRI,
    BlankNode,
    Graph,
    Literal,
    Namespace,
    NamespaceMap,
    Triple,
    graph_equal_ground,
    make_iri,
    make_literal,
)
from .serialize import to_ntriples_canonical, to_turtle
from .sparql_results import parse_sparql_results_csv, parse_sparql_results_json
from .turtle import parse_turtle

__version__ = "0.1.0"
