"""Batch harmonisation of record files, as driven by the ``harmonise`` command."""

import csv
import io
import json
from dataclasses import dataclass, field

from .codegen import unit_accessor
from .errors import ConfigError, HarmoniseError, RecordError, UnknownAccessor
from .patterns import ObservationRecord, PropertySpec, harmonise_observation
from .rdf import Graph
from .serialize import to_ntriples_canonical, to_turtle

__all__ = ["RecordDiagnostic", "RecordsError", "HarmoniseRun", "read_records", "resolve_specs", "run"]


class RecordsError(HarmoniseError):
    """The records file as a whole cannot be used."""


@dataclass(frozen=True)
class RecordDiagnostic:
    row: int  # 1-based over data rows
    field: str
    reason: str

    def __str__(self):
        return f"row {self.row}: {self.field}: {self.reason}"


@dataclass
class HarmoniseRun:
    graph: Graph
    records: int = 0
    ok: int = 0
    skipped: int = 0
    diagnostics: list = field(default_factory=list)
    aborted: bool = False

    def summary(self):
        return f"records={self.records} ok={self.ok} skipped={self.skipped} triples={len(self.graph)}"


def _read_csv(text, needed):
    reader = csv.DictReader(io.StringIO(text, newline=""))
    try:
        header = reader.fieldnames
    except csv.Error as e:
        raise RecordsError(f"CSV header: {e}") from None
    if header is None:
        return []
    missing = [c for c in needed if c not in header]
    if missing:
        raise RecordsError(f"CSV header lacks column(s) {', '.join(missing)}")
    rows = []
    try:
        for row in reader:
            if None in row:
                rows.append(RecordDiagnostic(len(rows) + 1, "*", f"row has {len(row[None])} cell(s) more than the header"))
                continue
            rows.append({k: (v.strip() if v is not None else None) for k, v in row.items()})
    except csv.Error as e:
        raise RecordsError(f"CSV line {reader.line_num}: {e}") from None
    return rows


def _read_json(text):
    try:
        doc = json.loads(text, parse_float=str, parse_int=str) if text.strip() else []
    except json.JSONDecodeError as e:
        raise RecordsError(f"records are not valid JSON: {e}") from None
    if not isinstance(doc, list):
        raise RecordsError("JSON records must be a top-level array")
    rows = []
    for i, obj in enumerate(doc, start=1):
        if not isinstance(obj, dict):
            rows.append(RecordDiagnostic(i, "*", "record is not a JSON object"))
            continue
        nested = sorted(k for k, v in obj.items() if isinstance(v, (dict, list)))
        if nested:
            rows.append(RecordDiagnostic(i, nested[0], "nested values are not supported; flatten the source first"))
            continue
        rows.append({k: (None if v is None else str(v).lower() if isinstance(v, bool) else v) for k, v in obj.items()})
    return rows


def read_records(text, fmt, needed=()):
    """Raw rows from a CSV or JSON records file.

    Rows that are unusable on their face come back as :class:`RecordDiagnostic`.
    JSON numbers keep their source spelling (``4.60`` stays ``"4.60"``).
    """
    if fmt == "csv":
        return _read_csv(text, needed)
    if fmt == "json":
        return _read_json(text)
    raise ValueError(f"unknown records format {fmt!r}")


def resolve_specs(config, catalog):
    """Config property specs -> ``PropertySpec`` objects with unit IRIs from ``catalog``."""
    out = {}
    for name, s in config.property_specs.items():
        try:
            unit = unit_accessor(catalog, s.unit)
            out[name] = PropertySpec(s.kind_slug, s.observed_property, unit, s.value_datatype)
        except UnknownAccessor as e:
            raise ConfigError(f"property spec {name!r}: {e}") from None
        except (ValueError, TypeError) as e:
            raise ConfigError(f"property spec {name!r}: {e}") from None
    return out


def _record(row, config, specs):
    for fld in ("id", "value", "timestamp", "latitude", "longitude"):
        v = row.get(config.columns[fld])
        if v is None or v == "":
            raise RecordError(f"missing (column {config.columns[fld]!r})", field=fld)
    name = config.default_spec
    if config.property_column is not None:
        name = row.get(config.property_column) or name
    if name not in specs:
        raise RecordError(f"no property spec named {name!r}", field="property")
    c = config.columns
    record = ObservationRecord(row[c["id"]], row[c["value"]], row[c["timestamp"]], row[c["latitude"]], row[c["longitude"]])
    return record, specs[name]


def run(config, catalog, rows, strict=False):
    """Harmonise ``rows`` and union the per-record graphs.

    With ``strict`` the run stops at the first bad record and the returned
    run is marked ``aborted``.
    """
    specs = resolve_specs(config, catalog)
    acc = set()
    result = HarmoniseRun(Graph())
    for n, row in enumerate(rows, start=1):
        result.records += 1
        try:
            if isinstance(row, RecordDiagnostic):
                raise RecordError(row.reason, field=row.field)
            record, spec = _record(row, config, specs)
            g = harmonise_observation(record, spec, config.iri_policy, catalog)
        except RecordError as e:
            result.skipped += 1
            result.diagnostics.append(RecordDiagnostic(n, e.field or "*", str(e)))
            if strict:
                result.aborted = True
                break
            continue
        acc.update(g.triples)
        result.ok += 1
    result.graph = Graph._wrap(frozenset(acc))
    return result


def render(graph, config):
    if config.output_format == "turtle":
        return to_turtle(graph, config.namespaces)
    return to_ntriples_canonical(graph)
