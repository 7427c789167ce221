"""Three-layer ontology template catalog.

``low``  mints IRIs and resolves vocabulary accessors,
``mid``  builds the SOSA observation and QUDT quantity-value patterns,
``high`` turns a source record into a complete observation graph.
"""

from .high import (
    HarmoniserRegistry,
    build_harmonisers,
    harmonise_observation,
    harmoniser_name,
    named_harmoniser,
)
from .low import (
    IriPolicy,
    format_coordinate,
    mint_feature_iri_from_location,
    mint_observation_iri,
    mint_result_iri,
    unit_accessor,
)
from .mid import create_quantity_value_result, create_sosa_observation
from .records import ObservationRecord, PropertySpec, check_timestamp, parse_magnitude
