"""Spiderforge version string – follows semantic versioning."""

__version__ = "0.3.0"
