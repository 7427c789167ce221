"""Pipeline configuration (YAML) for the ``harmonise`` command.

See ``data/reference_config.yaml`` for an annotated example. Unknown keys
are rejected so that typos fail loudly instead of being ignored.
"""

from dataclasses import dataclass, field

import yaml

from .errors import ConfigError, HarmoniseError, UnboundPrefix
from .patterns.low import IriPolicy
from .rdf import IRI, NamespaceMap
from .vocab import XSD_FLOAT

__all__ = ["PropertySpecConfig", "PipelineConfig", "load_config", "parse_config", "resolve_iri"]

RECORD_FIELDS = ("id", "value", "timestamp", "latitude", "longitude")
INPUT_FORMATS = ("csv", "json")
OUTPUT_FORMATS = ("ntriples-canonical", "turtle")


@dataclass(frozen=True)
class PropertySpecConfig:
    name: str
    kind_slug: str
    observed_property: IRI
    unit: str  # accessor name, resolved against the catalog at run time
    value_datatype: IRI = XSD_FLOAT


@dataclass(frozen=True)
class PipelineConfig:
    namespaces: NamespaceMap
    iri_policy: IriPolicy
    property_specs: dict
    input_format: str = "csv"
    columns: dict = field(default_factory=lambda: {f: f for f in RECORD_FIELDS})
    property_column: str | None = None
    default_spec: str | None = None
    output_format: str = "ntriples-canonical"
    output_path: str | None = None


def _section(doc, where, allowed, required=()):
    if not isinstance(doc, dict):
        raise ConfigError(f"{where}: expected a mapping")
    unknown = sorted(set(doc) - set(allowed))
    if unknown:
        raise ConfigError(f"{where}: unknown key(s) {', '.join(map(str, unknown))}")
    missing = [k for k in required if k not in doc]
    if missing:
        raise ConfigError(f"{where}: missing required key(s) {', '.join(missing)}")
    return doc


def resolve_iri(ns, text, where, base=None):
    """Expand ``prefix:local`` with ``ns``; absolute IRIs pass through.

    A bare name without ``:`` is appended to ``base`` when one is given.
    """
    if not isinstance(text, str) or not text:
        raise ConfigError(f"{where}: expected an IRI or CURIE, got {text!r}")
    prefix, sep, _ = text.partition(":")
    try:
        if not sep:
            if base is None:
                raise ConfigError(f"{where}: {text!r} is neither a CURIE nor an absolute IRI")
            return IRI(base.value + text)
        if prefix in ns:
            return ns.expand(text)
        if text.startswith(f"{prefix}://") or prefix in ("urn", "mailto", "tag"):
            return IRI(text)
        raise UnboundPrefix(prefix)
    except HarmoniseError as e:
        if isinstance(e, ConfigError):
            raise
        raise ConfigError(f"{where}: {e}") from None


def parse_config(doc):
    top = _section(
        doc, "config",
        ("namespaces", "iri_policy", "property_specs", "input", "output"),
        ("iri_policy", "property_specs"),
    )
    raw_ns = top.get("namespaces") or {}
    if not isinstance(raw_ns, dict):
        raise ConfigError("namespaces: expected a mapping of prefix -> IRI")
    try:
        ns = NamespaceMap({str(k): str(v) for k, v in raw_ns.items()})
    except HarmoniseError as e:
        raise ConfigError(f"namespaces: {e}") from None

    pol = _section(
        top["iri_policy"], "iri_policy",
        ("obs_base", "result_base", "feature_base", "property_base", "id_mode", "seed"),
        ("obs_base", "result_base", "feature_base", "property_base"),
    )
    bases = {k: resolve_iri(ns, pol[k], f"iri_policy.{k}") for k in
             ("obs_base", "result_base", "feature_base", "property_base")}
    seed = pol.get("seed")
    if seed is not None and (isinstance(seed, bool) or not isinstance(seed, int)):
        raise ConfigError("iri_policy.seed: expected an integer")
    try:
        policy = IriPolicy(**bases, id_mode=pol.get("id_mode", "deterministic"), seed=seed)
    except ValueError as e:
        raise ConfigError(f"iri_policy: {e}") from None

    raw_specs = top["property_specs"]
    if not isinstance(raw_specs, list) or not raw_specs:
        raise ConfigError("property_specs: expected a non-empty list")
    specs = {}
    for i, raw in enumerate(raw_specs):
        where = f"property_specs[{i}]"
        s = _section(raw, where, ("name", "kind_slug", "observed_property", "unit", "value_datatype"),
                     ("name", "kind_slug", "observed_property", "unit"))
        name = str(s["name"])
        if name in specs:
            raise ConfigError(f"{where}: duplicate property spec name {name!r}")
        dt = resolve_iri(ns, s["value_datatype"], f"{where}.value_datatype") if "value_datatype" in s else XSD_FLOAT
        specs[name] = PropertySpecConfig(
            name=name,
            kind_slug=str(s["kind_slug"]),
            observed_property=resolve_iri(ns, s["observed_property"], f"{where}.observed_property",
                                          base=policy.property_base),
            unit=str(s["unit"]),
            value_datatype=dt,
        )

    inp = _section(top.get("input") or {}, "input", ("format", "property_spec", "columns"))
    input_format = inp.get("format", "csv")
    if input_format not in INPUT_FORMATS:
        raise ConfigError(f"input.format: expected one of {INPUT_FORMATS}, got {input_format!r}")
    cols = _section(inp.get("columns") or {}, "input.columns", RECORD_FIELDS + ("property",))
    columns = {f: str(cols.get(f, f)) for f in RECORD_FIELDS}
    property_column = str(cols["property"]) if "property" in cols else None
    default_spec = inp.get("property_spec")
    if default_spec is not None and default_spec not in specs:
        raise ConfigError(f"input.property_spec: no property spec named {default_spec!r}")
    if default_spec is None and property_column is None:
        if len(specs) != 1:
            raise ConfigError("input.property_spec is required when several property specs are configured")
        default_spec = next(iter(specs))

    out = _section(top.get("output") or {}, "output", ("format", "path"))
    output_format = out.get("format", "ntriples-canonical")
    if output_format not in OUTPUT_FORMATS:
        raise ConfigError(f"output.format: expected one of {OUTPUT_FORMATS}, got {output_format!r}")

    return PipelineConfig(
        namespaces=ns,
        iri_policy=policy,
        property_specs=specs,
        input_format=input_format,
        columns=columns,
        property_column=property_column,
        default_spec=default_spec,
        output_format=output_format,
        output_path=out.get("path"),
    )


def load_config(path):
    with open(path, encoding="utf-8") as fh:
        try:
            doc = yaml.safe_load(fh)
        except yaml.YAMLError as e:
            raise ConfigError(f"{path}: not valid YAML: {e}") from None
    return parse_config(doc)
