"""Generating unit accessors from vocabulary data.

Run:  python demos/02_unit_catalog.py

The same three QUDT units arrive by two routes: a Turtle snapshot of the
unit vocabulary, and the JSON results of a SELECT query over it. Both
should yield identical entries and an identical manifest.
"""

from importlib.resources import files

from harmonise import IRI
from harmonise.codegen import extract_vocab_entries, generate_catalog, load_catalog
from harmonise.sparql_results import parse_sparql_results_json
from harmonise.turtle import parse_turtle
from harmonise.vocab import QUDT_UNIT

data = files("harmonise") / "data"

graph, _ = parse_turtle((data / "qudt_units.ttl").read_text(encoding="utf-8"))
results = parse_sparql_results_json((data / "qudt_units.srj").read_text(encoding="utf-8"))
print(f"snapshot: {len(graph)} triples; query results: {len(results.rows)} rows over {results.vars}")
print("query:\n" + (data / "qudt_units.rq").read_text(encoding="utf-8"))

from_graph = extract_vocab_entries(graph, "unit")
from_results = extract_vocab_entries(results, "unit")
for e in from_graph:
    print(f"  {e.local:<10} {e.label!r}")
# DEG_C carries a German label and M-PER-SEC an en-US spelling; English wins.
assert from_graph == from_results

template = (data / "unit_accessor.py.tmpl").read_text(encoding="utf-8")
catalog, manifest, source = generate_catalog(from_graph, template)
assert manifest == generate_catalog(from_results, template)[1]

print("\nmanifest:")
print(manifest, end="")
print("\ngenerated source:")
print(source, end="")

# The manifest is what runs; the source is there to read or to compile.
loaded = load_catalog(manifest)
assert loaded == catalog
scope = {"IRI": IRI, "QUDT_UNIT": QUDT_UNIT}
exec(source, scope)
for name in loaded:
    assert scope[name]() == loaded.resolve(name)
print(f"\n{len(loaded)} accessors agree with the manifest")
