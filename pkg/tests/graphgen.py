"""Random ground graphs over a fixed, deliberately awkward term pool, and random records."""

from hypothesis import strategies as st

from harmonise import IRI, Graph, Literal, NamespaceMap, Triple
from harmonise.patterns import ObservationRecord
from harmonise.vocab import RDF_TYPE, XSD_BOOLEAN, XSD_DATETIME, XSD_DECIMAL, XSD_FLOAT, XSD_INTEGER

NS = NamespaceMap({
    "ex": "http://ex.org/",
    "deep": "http://ex.org/deep/",
    "sosa": "http://www.w3.org/ns/sosa/",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
})

IRIS = [
    IRI("http://ex.org/a"),
    IRI("http://ex.org/b"),
    IRI("http://ex.org/deep/c"),
    IRI("http://ex.org/with.dot"),
    IRI("http://ex.org/trailing."),  # local ending in '.' needs <...>
    IRI("http://ex.org/"),  # empty local name
    IRI("http://www.w3.org/ns/sosa/Observation"),
    IRI("http://elsewhere.net/x?q=1#frag"),  # not covered by any prefix
    IRI("urn:uuid:1234"),
    IRI("http://ex.org/café"),
    RDF_TYPE,
]

LITERALS = [
    Literal(""),
    Literal("plain"),
    Literal('a "quoted" word'),
    Literal("line1\nline2\r\tend"),
    Literal("back\\slash"),
    Literal("æøå ℃ \U0001f30a"),
    Literal("hei", lang="no"),
    Literal("colour", lang="en-GB"),
    Literal("4.6", XSD_FLOAT),
    Literal("4.60", XSD_DECIMAL),
    Literal("-7", XSD_INTEGER),
    Literal("true", XSD_BOOLEAN),
    Literal("2025-06-27T01:00:00Z", XSD_DATETIME),
    Literal('""triple-ish"""'),
    Literal("x", IRI("http://elsewhere.net/dt")),
]

PREDICATES = [i for i in IRIS if i.value not in ("http://ex.org/",)][:7] + [RDF_TYPE]
SUBJECTS = IRIS
OBJECTS = IRIS + LITERALS

assert len(set(IRIS) | set(LITERALS)) <= 30


def random_triple(rng):
    return Triple(rng.choice(SUBJECTS), rng.choice(PREDICATES), rng.choice(OBJECTS))


def random_graph(rng, max_size=12):
    return Graph(random_triple(rng) for _ in range(rng.randint(0, max_size)))


triples = st.builds(Triple, st.sampled_from(SUBJECTS), st.sampled_from(PREDICATES), st.sampled_from(OBJECTS))
graphs = st.frozensets(triples, max_size=12).map(Graph)


def random_record(rng, id=None):
    """A valid observation record with awkward-but-legal field spellings."""
    value = rng.choice([
        f"{rng.uniform(-5, 35):.{rng.randint(0, 4)}f}",
        str(rng.randint(-100, 100)),
        f"{rng.uniform(0, 1):.3e}",
        "4.60",
        ".5",
    ])
    ts = "%04d-%02d-%02dT%02d:%02d:%02d%s%s" % (
        rng.randint(1, 9999), rng.randint(1, 12), rng.randint(1, 28),
        rng.randint(0, 23), rng.randint(0, 59), rng.randint(0, 59),
        rng.choice(["", ".5", ".123456"]),
        rng.choice(["Z", "+01:00", "-09:30", "+14:00"]),
    )
    lat = rng.choice([round(rng.uniform(-90, 90), rng.randint(0, 6)), 90, -90, 0.0, "-0.00"])
    lon = rng.choice([round(rng.uniform(-180, 180), rng.randint(0, 6)), 180, -180, "12.5000"])
    if id is None:
        id = "".join(rng.choice("abcXYZ0123456789_.-") for _ in range(rng.randint(1, 12)))
    return ObservationRecord(id=id, value=value, timestamp=ts, latitude=lat, longitude=lon)
