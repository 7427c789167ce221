"""Mid-level template functions: the SOSA observation and QUDT quantity-value patterns."""

from ..errors import BadTimestamp, NonNumericValue
from ..rdf import Graph, Literal, Triple
from ..vocab import (
    NUMERIC_DATATYPES,
    QUDT_HAS_UNIT,
    QUDT_NUMERIC_VALUE,
    QUDT_QUANTITY_VALUE,
    RDF_TYPE,
    SOSA_HAS_FEATURE_OF_INTEREST,
    SOSA_HAS_RESULT,
    SOSA_OBSERVATION,
    SOSA_OBSERVED_PROPERTY,
    SOSA_RESULT_TIME,
    XSD_DATETIME,
)
from .records import parse_magnitude

__all__ = ["create_sosa_observation", "create_quantity_value_result"]


def create_sosa_observation(obs_iri, foi_iri, observed_property, result_time):
    """The four observation triples: type, feature of interest, property, result time.

    The ``sosa:hasResult`` link is added by :func:`create_quantity_value_result`.
    """
    if not isinstance(result_time, Literal) or result_time.datatype != XSD_DATETIME:
        raise BadTimestamp(f"result time must be an xsd:dateTime literal, got {result_time!r}")
    return Graph._wrap(frozenset((
        Triple(obs_iri, RDF_TYPE, SOSA_OBSERVATION),
        Triple(obs_iri, SOSA_HAS_FEATURE_OF_INTEREST, foi_iri),
        Triple(obs_iri, SOSA_OBSERVED_PROPERTY, observed_property),
        Triple(obs_iri, SOSA_RESULT_TIME, result_time),
    )))


def create_quantity_value_result(obs_iri, value, unit, result_iri):
    """A ``qudt:QuantityValue`` result linked from the observation.

    Returns ``(result_iri, graph)`` where the graph holds the type, numeric
    value and unit of the result plus ``obs sosa:hasResult result``.
    """
    if not isinstance(value, Literal) or value.datatype not in NUMERIC_DATATYPES:
        raise NonNumericValue(f"value must be an xsd:float/double/decimal literal, got {value!r}")
    parse_magnitude(value.lexical)
    g = Graph._wrap(frozenset((
        Triple(result_iri, RDF_TYPE, QUDT_QUANTITY_VALUE),
        Triple(result_iri, QUDT_NUMERIC_VALUE, value),
        Triple(result_iri, QUDT_HAS_UNIT, unit),
        Triple(obs_iri, SOSA_HAS_RESULT, result_iri),
    )))
    return result_iri, g
