"""Command errors – configuration problems and prediction/manifest id mismatches."""

from .error import Error


class ConfigError(Error):
    error_name = "Config Error"


class IdMismatch(Error):
    error_name = "Id Mismatch"
