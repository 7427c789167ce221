"""One sea-temperature reading, harmonised layer by layer.

Run:  python demos/01_sea_temperature_walkthrough.py

The record below is a single row from a fish-farm sensor feed. We turn it
into a SOSA observation with a QUDT quantity value, first by calling the
mid-level builders by hand and then through the generated high-level
harmoniser, and check that both routes give the same graph.
"""

from importlib.resources import files

from harmonise import IriPolicy, Literal, NamespaceMap, to_turtle
from harmonise.codegen import load_catalog, unit_accessor
from harmonise.patterns import (
    ObservationRecord,
    build_harmonisers,
    create_quantity_value_result,
    create_sosa_observation,
    mint_feature_iri_from_location,
    mint_observation_iri,
    mint_result_iri,
)
from harmonise.vocab import XSD_DATETIME, XSD_FLOAT

ns = NamespaceMap({
    "sosa": "http://www.w3.org/ns/sosa/",
    "qudt": "http://qudt.org/schema/qudt/",
    "unit": "http://qudt.org/vocab/unit/",
    "xsd": "http://www.w3.org/2001/XMLSchema#",
    "oim-obs": "https://example.org/oim/obs/",
    "oim-res": "https://example.org/oim/res/",
    "oim-feat": "https://example.org/oim/feat/",
    "oim-prop": "https://example.org/oim/prop/",
})
policy = IriPolicy(ns["oim-obs"], ns["oim-res"], ns["oim-feat"], ns["oim-prop"])

# The unit catalog is generated from vocabulary data (see demo 02); here we
# just load the shipped manifest.
catalog = load_catalog((files("harmonise") / "data" / "qudt_units.manifest").read_text(encoding="utf-8"))
deg_c = unit_accessor(catalog, "get_qudt_unit_degree_celsius")
print("unit:", deg_c.n3())

record = ObservationRecord(id="1234", value="4.6", timestamp="2025-06-27T01:00:00Z", latitude=70.41, longitude=0.00)

# Low level: mint the IRIs.
obs = mint_observation_iri(policy, "sea_temperature", record.id)
res = mint_result_iri(policy, "sea_temperature", record.id)
foi = mint_feature_iri_from_location(policy, record.latitude, record.longitude)
print("observation:", obs.n3())
print("feature:    ", foi.n3())

# Mid level: the two design patterns, four triples each.
observation = create_sosa_observation(
    obs, foi, ns.expand("oim-prop:seaTemperature"), Literal(record.timestamp, XSD_DATETIME)
)
_, result = create_quantity_value_result(obs, Literal(record.value, XSD_FLOAT), deg_c, res)
by_hand = observation + result
print(f"\nmid-level builders: {len(observation)} + {len(result)} = {len(by_hand)} triples")

# High level: a named harmoniser generated from a small property table.
registry = build_harmonisers(
    [("sea_temperature", ns.expand("oim-prop:seaTemperature"), "get_qudt_unit_degree_celsius")],
    catalog,
    policy,
)
print("harmonisers:", ", ".join(registry))
g = registry.harmonise_oim_sosa_observation_sea_temperature_degree_celsius(record)
assert g == by_hand
print()
print(to_turtle(g, ns), end="")

# A misspelt accessor fails straight away and points at the right name.
try:
    unit_accessor(catalog, "get_qudt_unit_degre_celsius")
except LookupError as e:
    print("\n" + str(e))
