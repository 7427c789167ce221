"""Source records and property specifications fed to the harmonisers."""

import calendar
import math
import re
from dataclasses import dataclass

from ..errors import BadTimestamp, CoordinateOutOfRange, NonNumericValue, RecordError
from ..rdf import IRI
from ..vocab import NUMERIC_DATATYPES, XSD_FLOAT

_DATETIME_RE = re.compile(
    r"(?P<year>\d{4})-(?P<month>\d{2})-(?P<day>\d{2})"
    r"T(?P<hour>\d{2}):(?P<minute>\d{2}):(?P<second>\d{2})(?:\.\d+)?"
    r"(?P<tz>Z|[+-](?P<tzh>\d{2}):(?P<tzm>\d{2}))"
)
_DECIMAL_RE = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?")
_SLUG_RE = re.compile(r"[a-z][a-z0-9_]*")


def check_timestamp(text):
    """Validate an ``xsd:dateTime`` lexical form that carries a timezone.

    Month and day-of-month bounds are checked; a seconds field of 60 is
    rejected.
    """
    m = _DATETIME_RE.fullmatch(text) if isinstance(text, str) else None
    if m is None:
        raise BadTimestamp(f"{text!r} is not of the form YYYY-MM-DDThh:mm:ss[.s](Z|+hh:mm)")
    year, month, day = int(m["year"]), int(m["month"]), int(m["day"])
    if year == 0:
        raise BadTimestamp(f"{text!r}: year 0000 is not allowed")
    if not 1 <= month <= 12:
        raise BadTimestamp(f"{text!r}: month {month} out of range")
    if not 1 <= day <= calendar.monthrange(year, month)[1]:
        raise BadTimestamp(f"{text!r}: day {day} out of range for {year:04d}-{month:02d}")
    if int(m["hour"]) > 23 or int(m["minute"]) > 59 or int(m["second"]) > 59:
        raise BadTimestamp(f"{text!r}: time of day out of range")
    if m["tzh"] is not None and (int(m["tzh"]) > 14 or int(m["tzm"]) > 59):
        raise BadTimestamp(f"{text!r}: timezone offset out of range")
    return text


def parse_magnitude(lexical):
    """Float value of a decimal/float lexical form; rejects NaN and infinities."""
    if not isinstance(lexical, str) or not _DECIMAL_RE.fullmatch(lexical):
        raise NonNumericValue(f"{lexical!r} is not a finite decimal number")
    value = float(lexical)
    if not math.isfinite(value):
        raise NonNumericValue(f"{lexical!r} is out of the finite float range")
    return value


def _coordinate(value, lo, hi, field):
    if isinstance(value, str):
        try:
            value = parse_magnitude(value)
        except NonNumericValue:
            raise CoordinateOutOfRange(f"{field} {value!r} is not a number", field=field) from None
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise CoordinateOutOfRange(f"{field} must be a number, got {value!r}", field=field)
    value = float(value)
    if not (math.isfinite(value) and lo <= value <= hi):
        raise CoordinateOutOfRange(f"{field} {value} outside [{lo}, {hi}]", field=field)
    return value


@dataclass(frozen=True)
class ObservationRecord:
    """One source row.

    ``value`` keeps its source lexical form (``"4.6"`` stays ``"4.6"``);
    passing a float stores ``repr(value)``. ``magnitude`` is the parsed
    number. Latitude and longitude accept numbers or numeric strings.
    """

    id: str
    value: str
    timestamp: str
    latitude: float
    longitude: float

    def __post_init__(self):
        if not isinstance(self.id, str):
            object.__setattr__(self, "id", str(self.id))
        if not self.id:
            raise RecordError("record id is empty", field="id")
        value = self.value
        if isinstance(value, bool):
            raise NonNumericValue(f"value {value!r} is not numeric")
        if isinstance(value, (int, float)):
            value = repr(value)
            object.__setattr__(self, "value", value)
        parse_magnitude(value)
        check_timestamp(self.timestamp)
        object.__setattr__(self, "latitude", _coordinate(self.latitude, -90.0, 90.0, "latitude"))
        object.__setattr__(self, "longitude", _coordinate(self.longitude, -180.0, 180.0, "longitude"))

    @property
    def magnitude(self):
        return float(self.value)


@dataclass(frozen=True)
class PropertySpec:
    """What a harmoniser emits for one observable property.

    ``kind_slug`` names the observation kind in minted IRIs
    (``sea_temperature`` -> ``.../sea_temperature_1234``).
    """

    kind_slug: str
    observed_property: IRI
    unit: IRI
    value_datatype: IRI = XSD_FLOAT

    def __post_init__(self):
        if not _SLUG_RE.fullmatch(self.kind_slug or ""):
            raise ValueError(f"kind_slug {self.kind_slug!r} must match [a-z][a-z0-9_]*")
        for name in ("observed_property", "unit", "value_datatype"):
            if not isinstance(getattr(self, name), IRI):
                raise TypeError(f"{name} must be an IRI")
        if self.value_datatype not in NUMERIC_DATATYPES:
            raise ValueError(f"value_datatype {self.value_datatype} is not xsd:float, xsd:double or xsd:decimal")
