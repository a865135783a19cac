"""Forge package – region layouts, distortion planning, task records, and the manifest."""

from .records import Region, Answer, TaskRecord, SampleRecord
from .queries import GroundingQuery
from .settings import ForgeSettings
from .regions import synth_regions, uniform_region, ingest_regions
from .planning import GroundingRequest, plan_distortions, is_well_posed
from .source_images import load_base_image, procedural_card
from .forge import TaskForge, forge_samples
from .statistics import ForgeTally, forge_statistics, format_statistics
from .manifest import ManifestWriter, write_manifest, read_manifest, validate_sample, sample_to_json

__all__ = [
    "Region",
    "Answer",
    "TaskRecord",
    "SampleRecord",
    "GroundingQuery",
    "ForgeSettings",
    "synth_regions",
    "uniform_region",
    "ingest_regions",
    "GroundingRequest",
    "plan_distortions",
    "is_well_posed",
    "load_base_image",
    "procedural_card",
    "TaskForge",
    "forge_samples",
    "ForgeTally",
    "forge_statistics",
    "format_statistics",
    "ManifestWriter",
    "write_manifest",
    "read_manifest",
    "validate_sample",
    "sample_to_json",
]
