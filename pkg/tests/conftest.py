from pathlib import Path

import pytest

from harmonise import IRI, Graph, IriPolicy, Literal, NamespaceMap, Triple
from harmonise.codegen import load_catalog
from harmonise.patterns import ObservationRecord, PropertySpec
from harmonise.vocab import QUDT_UNIT

FIXTURES = Path(__file__).parent / "fixtures"
DATA = Path(__file__).parent.parent / "src" / "harmonise" / "data"

OBS = "https://example.org/oim/obs/"
RES = "https://example.org/oim/res/"
FEAT = "https://example.org/oim/feat/"
PROP = "https://example.org/oim/prop/"

REFERENCE_PREFIXES = {
    "sosa": "http://www.w3.org/ns/sosa/",
    "qudt": "http://qudt.org/schema/qudt/",
    "unit": "http://qudt.org/vocab/unit/",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "oim-obs": OBS,
    "oim-res": RES,
    "oim-feat": FEAT,
    "oim-prop": PROP,
}


def golden_graph():
    """The sea-temperature observation, spelled out triple by triple."""
    obs = IRI(OBS + "sea_temperature_1234")
    res = IRI(RES + "sea_temperature_1234")
    sosa = "http://www.w3.org/ns/sosa/"
    qudt = "http://qudt.org/schema/qudt/"
    xsd = "http://www.w3.org/2001/XMLSchema#"
    rdf_type = IRI("http://www.w3.org/1999/02/22-rdf-syntax-ns#type")
    return Graph([
        Triple(obs, rdf_type, IRI(sosa + "Observation")),
        Triple(obs, IRI(sosa + "hasFeatureOfInterest"), IRI(FEAT + "loc_70.41_0.0")),
        Triple(obs, IRI(sosa + "hasResult"), res),
        Triple(obs, IRI(sosa + "observedProperty"), IRI(PROP + "seaTemperature")),
        Triple(obs, IRI(sosa + "resultTime"), Literal("2025-06-27T01:00:00Z", IRI(xsd + "dateTime"))),
        Triple(res, rdf_type, IRI(qudt + "QuantityValue")),
        Triple(res, IRI(qudt + "numericValue"), Literal("4.6", IRI(xsd + "float"))),
        Triple(res, IRI(qudt + "unit"), IRI("http://qudt.org/vocab/unit/DEG_C")),
    ])


@pytest.fixture
def golden():
    return golden_graph()


@pytest.fixture
def reference_ns():
    return NamespaceMap(REFERENCE_PREFIXES)


@pytest.fixture
def policy():
    return IriPolicy(IRI(OBS), IRI(RES), IRI(FEAT), IRI(PROP))


@pytest.fixture
def catalog():
    return load_catalog((DATA / "qudt_units.manifest").read_text(encoding="utf-8"))


@pytest.fixture
def sea_temperature_spec():
    return PropertySpec("sea_temperature", IRI(PROP + "seaTemperature"), QUDT_UNIT["DEG_C"])


@pytest.fixture
def reference_record():
    return ObservationRecord(id="1234", value="4.6", timestamp="2025-06-27T01:00:00Z", latitude=70.41, longitude=0.00)


# -- acceptance summary ------------------------------------------------------

_criteria = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n, title): acceptance criterion checked by the test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    n, title = mark.args
    if report.when == "call" or report.failed:
        prev = _criteria.get(n, (title, True))
        _criteria[n] = (title, prev[1] and report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        title, ok = _criteria[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}")
