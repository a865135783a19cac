"""Forge errors – region synthesis, ground-truth uniqueness, and manifest schema failures."""

from .error import Error


class Unsatisfiable(Error):
    error_name = "Unsatisfiable"


class UniquenessFailure(Error):
    error_name = "Uniqueness Failure"


class SchemaViolation(Error):
    error_name = "Schema Violation"


# a dangling region id is a schema problem when it comes from a manifest
class UnknownRegion(SchemaViolation):
    error_name = "Unknown Region"


class RegionOverlap(Error):
    error_name = "Region Overlap"
