"""Manifest package – writing, reading, and validating forged samples."""

from .writer import (
    ManifestWriter,
    write_manifest,
    sample_to_json,
    region_to_json,
    task_to_json,
    MASK_RLE,
    MASK_PNG,
    MANIFEST_NAME,
)
from .reader import read_manifest, parse_sample
from .validation import validate_sample

__all__ = [
    "ManifestWriter",
    "write_manifest",
    "sample_to_json",
    "region_to_json",
    "task_to_json",
    "MASK_RLE",
    "MASK_PNG",
    "MANIFEST_NAME",
    "read_manifest",
    "parse_sample",
    "validate_sample",
]
