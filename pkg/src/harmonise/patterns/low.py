"""Low-level template functions: IRI minting and vocabulary lookups.

These are the only functions in the pattern layer that know how IRIs are
spelled. Mid-level builders receive finished IRIs.
"""

import math
import random
import re
import threading
from dataclasses import dataclass, field
from decimal import Decimal

from ..codegen import unit_accessor
from ..errors import BadIdentifier, CoordinateOutOfRange
from ..rdf import IRI

__all__ = [
    "IriPolicy",
    "mint_observation_iri",
    "mint_result_iri",
    "format_coordinate",
    "mint_feature_iri_from_location",
    "unit_accessor",
]

_ID_RE = re.compile(r"[A-Za-z0-9_.\-]+")
ID_MODES = ("deterministic", "random")


class _TokenSource:
    """Seeded source of unique hex tokens. Safe to share between threads."""

    def __init__(self, seed):
        self._rng = random.Random(seed)
        self._issued = set()
        self._lock = threading.Lock()

    def next(self):
        with self._lock:
            while True:
                token = f"{self._rng.getrandbits(128):032x}"
                if token not in self._issued:
                    self._issued.add(token)
                    return token


@dataclass(frozen=True)
class IriPolicy:
    """Where minted IRIs live and how result ids are chosen.

    With ``id_mode="random"`` result IRIs use fresh tokens drawn from a
    generator seeded with ``seed``; the same seed gives the same sequence
    for a fresh policy.
    """

    obs_base: IRI
    result_base: IRI
    feature_base: IRI
    property_base: IRI
    id_mode: str = "deterministic"
    seed: int | None = None
    _tokens: _TokenSource | None = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        for name in ("obs_base", "result_base", "feature_base", "property_base"):
            base = getattr(self, name)
            if not isinstance(base, IRI):
                base = IRI(str(base))
                object.__setattr__(self, name, base)
            if not base.value.endswith(("/", "#")):
                raise ValueError(f"{name} {base.value!r} must end with '/' or '#'")
        if self.id_mode not in ID_MODES:
            raise ValueError(f"id_mode must be one of {ID_MODES}, got {self.id_mode!r}")
        if self.id_mode == "random":
            object.__setattr__(self, "_tokens", _TokenSource(self.seed))

    def fresh_token(self):
        if self._tokens is None:
            raise RuntimeError("fresh tokens are only available with id_mode='random'")
        return self._tokens.next()


def _check_id(id):
    if not isinstance(id, str) or not _ID_RE.fullmatch(id):
        raise BadIdentifier(f"identifier {id!r} must be non-empty and use only [A-Za-z0-9_.-]")


def mint_observation_iri(policy, kind_slug, id):
    _check_id(id)
    return IRI(f"{policy.obs_base.value}{kind_slug}_{id}")


def mint_result_iri(policy, kind_slug, id):
    """Result IRI for an observation; ``id`` is replaced by a fresh token in random mode."""
    _check_id(id)
    if policy.id_mode == "random":
        id = policy.fresh_token()
    return IRI(f"{policy.result_base.value}{kind_slug}_{id}")


def format_coordinate(value):
    """Shortest plain decimal for a coordinate, always with a fractional digit.

    >>> format_coordinate(70.41), format_coordinate(0.00), format_coordinate(-12.5000)
    ('70.41', '0.0', '-12.5')
    """
    if isinstance(value, str):
        d = Decimal(value)
    else:
        value = float(value)
        if not math.isfinite(value):
            raise ValueError(f"coordinate {value} is not finite")
        d = Decimal(repr(value))
    if not d.is_finite():
        raise ValueError(f"coordinate {value!r} is not finite")
    text = format(d, "f")
    if "." not in text:
        text += ".0"
    text = text.rstrip("0")
    if text.endswith("."):
        text += "0"
    if text in ("-0.0", "+0.0"):
        text = "0.0"
    return text.lstrip("+")


def mint_feature_iri_from_location(policy, latitude, longitude):
    lat, lon = float(latitude), float(longitude)
    if not (math.isfinite(lat) and -90.0 <= lat <= 90.0):
        raise CoordinateOutOfRange(f"latitude {latitude} outside [-90, 90]", field="latitude")
    if not (math.isfinite(lon) and -180.0 <= lon <= 180.0):
        raise CoordinateOutOfRange(f"longitude {longitude} outside [-180, 180]", field="longitude")
    return IRI(f"{policy.feature_base.value}loc_{format_coordinate(lat)}_{format_coordinate(lon)}")
