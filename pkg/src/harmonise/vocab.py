"""Namespaces and the fixed set of vocabulary terms the patterns emit."""

from .rdf import Namespace, NamespaceMap

RDF = Namespace("http://www.w3.org/1999/02/22-rdf-syntax-ns#")
RDFS = Namespace("http://www.w3.org/2000/01/rdf-schema#")
XSD = Namespace("http://www.w3.org/2001/XMLSchema#")
SOSA = Namespace("http://www.w3.org/ns/sosa/")
QUDT = Namespace("http://qudt.org/schema/qudt/")
QUDT_UNIT = Namespace("http://qudt.org/vocab/unit/")
QUDT_QUANTITYKIND = Namespace("http://qudt.org/vocab/quantitykind/")

RDF_TYPE = RDF.type
RDFS_LABEL = RDFS.label

SOSA_OBSERVATION = SOSA.Observation
SOSA_RESULT = SOSA.Result
SOSA_OBSERVABLE_PROPERTY = SOSA.ObservableProperty
SOSA_HAS_FEATURE_OF_INTEREST = SOSA.hasFeatureOfInterest
SOSA_HAS_RESULT = SOSA.hasResult
SOSA_OBSERVED_PROPERTY = SOSA.observedProperty
SOSA_RESULT_TIME = SOSA.resultTime
# Legacy result encoding; defined for completeness, never emitted.
SOSA_HAS_VALUE = SOSA.hasValue
SOSA_HAS_UNIT = SOSA.hasUnit

QUDT_UNIT_CLASS = QUDT.Unit
QUDT_QUANTITY_KIND_CLASS = QUDT.QuantityKind
QUDT_QUANTITY_VALUE = QUDT.QuantityValue
QUDT_NUMERIC_VALUE = QUDT.numericValue
QUDT_HAS_UNIT = QUDT.unit

XSD_STRING = XSD.string
XSD_FLOAT = XSD.float
XSD_DOUBLE = XSD.double
XSD_DECIMAL = XSD.decimal
XSD_INTEGER = XSD.integer
XSD_BOOLEAN = XSD.boolean
XSD_DATETIME = XSD.dateTime

NUMERIC_DATATYPES = frozenset({XSD_FLOAT, XSD_DOUBLE, XSD_DECIMAL})

WELL_KNOWN = frozenset(
    {
        RDF_TYPE,
        SOSA_OBSERVATION,
        SOSA_HAS_FEATURE_OF_INTEREST,
        SOSA_HAS_RESULT,
        SOSA_OBSERVED_PROPERTY,
        SOSA_RESULT_TIME,
        SOSA_RESULT,
        SOSA_HAS_VALUE,
        SOSA_HAS_UNIT,
        QUDT_QUANTITY_VALUE,
        QUDT_NUMERIC_VALUE,
        QUDT_HAS_UNIT,
        XSD_FLOAT,
        XSD_DATETIME,
    }
)

STANDARD_PREFIXES = NamespaceMap(
    {
        "rdf": RDF.base,
        "rdfs": RDFS.base,
        "xsd": XSD.base,
        "sosa": SOSA.base,
        "qudt": QUDT.base,
        "unit": QUDT_UNIT.base,
        "quantitykind": QUDT_QUANTITYKIND.base,
    }
)
