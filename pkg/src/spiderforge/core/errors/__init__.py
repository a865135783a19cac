"""Error handling package – exposes the location tracker, the base error, and every domain error."""

from .location import Location
from .error import Error
from .imaging_errors import LengthMismatch, DimMismatch, EmptyMask
from .distortion_errors import InvalidLevel, IllegalOrder
from .grounding_errors import (
    OutOfFrame,
    NonPositiveTau,
    UnnormalizedProbs,
    MissingLogits,
    BoundaryPoint,
)
from .forge_errors import (
    Unsatisfiable,
    UniquenessFailure,
    UnknownRegion,
    RegionOverlap,
    SchemaViolation,
)
from .segmentation_errors import NoRegions, PeerUnreachable, ProtocolViolation
from .metric_errors import EmptyResults, EmptyInput, DegenerateInput, DegenerateMatrix
from .command_errors import ConfigError, IdMismatch

__all__ = [
    "Location",
    "Error",
    "LengthMismatch",
    "DimMismatch",
    "EmptyMask",
    "InvalidLevel",
    "IllegalOrder",
    "OutOfFrame",
    "NonPositiveTau",
    "UnnormalizedProbs",
    "MissingLogits",
    "BoundaryPoint",
    "Unsatisfiable",
    "UniquenessFailure",
    "UnknownRegion",
    "RegionOverlap",
    "SchemaViolation",
    "NoRegions",
    "PeerUnreachable",
    "ProtocolViolation",
    "EmptyResults",
    "EmptyInput",
    "DegenerateInput",
    "DegenerateMatrix",
    "ConfigError",
    "IdMismatch",
]
