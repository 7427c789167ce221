"""High-level harmonisers: one source record in, one observation graph out."""

import difflib
from dataclasses import dataclass

from ..codegen import Catalog, unit_accessor
from ..errors import UnknownAccessor, UnresolvedUnit
from ..rdf import Literal
from ..vocab import XSD_DATETIME
from .low import mint_feature_iri_from_location, mint_observation_iri, mint_result_iri
from .mid import create_quantity_value_result, create_sosa_observation
from .records import PropertySpec

__all__ = [
    "harmonise_observation",
    "harmoniser_name",
    "HarmoniserRegistry",
    "build_harmonisers",
    "named_harmoniser",
]

HARMONISER_PREFIX = "harmonise_oim_sosa_observation_"


def harmonise_observation(record, spec, policy, catalog=None):
    """Observation + quantity-value graph for one record (always 8 triples).

    When ``catalog`` is given, ``spec.unit`` must be one of its IRIs.
    """
    if catalog is not None and not catalog.has_iri(spec.unit):
        raise UnresolvedUnit(f"unit {spec.unit} is not in the loaded {catalog.kind} catalog")
    obs_iri = mint_observation_iri(policy, spec.kind_slug, record.id)
    foi_iri = mint_feature_iri_from_location(policy, record.latitude, record.longitude)
    obs_graph = create_sosa_observation(
        obs_iri, foi_iri, spec.observed_property, Literal(record.timestamp, XSD_DATETIME)
    )
    _, result_graph = create_quantity_value_result(
        obs_iri,
        Literal(record.value, spec.value_datatype),
        spec.unit,
        mint_result_iri(policy, spec.kind_slug, record.id),
    )
    return obs_graph + result_graph


def harmoniser_name(kind_slug, unit_accessor_name):
    """``harmonise_oim_sosa_observation_<property>_<unit>`` for a spec and its unit accessor."""
    unit_slug = unit_accessor_name.removeprefix("get_qudt_unit_")
    return f"{HARMONISER_PREFIX}{kind_slug}_{unit_slug}"


@dataclass(frozen=True)
class HarmoniserRegistry:
    """Generated high-level harmonisers, keyed by name."""

    specs: dict
    policy: object
    catalog: Catalog | None = None

    def __contains__(self, name):
        return name in self.specs

    def __iter__(self):
        return iter(sorted(self.specs))

    def __len__(self):
        return len(self.specs)

    def __getattr__(self, name):
        # lets callers write registry.harmonise_oim_sosa_observation_...(record)
        if name.startswith(HARMONISER_PREFIX):
            return named_harmoniser(self, name)
        raise AttributeError(name)


def build_harmonisers(table, catalog, policy):
    """Registry of harmonisers from ``(kind_slug, observed_property, unit_accessor_name[, datatype])`` rows.

    Each unit accessor name is resolved against ``catalog``.
    """
    specs = {}
    for row in table:
        kind_slug, observed_property, accessor = row[:3]
        extra = {"value_datatype": row[3]} if len(row) > 3 else {}
        spec = PropertySpec(kind_slug, observed_property, unit_accessor(catalog, accessor), **extra)
        name = harmoniser_name(kind_slug, accessor)
        if name in specs and specs[name] != spec:
            raise ValueError(f"two property specs generate the harmoniser name {name!r}")
        specs[name] = spec
    return HarmoniserRegistry(specs, policy, catalog)


def named_harmoniser(registry, name):
    """The record -> Graph function registered under ``name``."""
    try:
        spec = registry.specs[name]
    except KeyError:
        close = difflib.get_close_matches(name, registry.specs.keys(), n=1, cutoff=0.8)
        raise UnknownAccessor(name, close[0] if close else None) from None

    def harmonise(record):
        return harmonise_observation(record, spec, registry.policy, registry.catalog)

    harmonise.__name__ = name
    harmonise.__qualname__ = name
    harmonise.__doc__ = f"Harmonise a record as {spec.kind_slug} in <{spec.unit.value}>."
    return harmonise
