"""Sample validation – region layout, plan legality, spatial terms, and answer uniqueness."""

import numpy as np

from spiderforge.core.constants import TASK_GROUNDING, SCOPE_GLOBAL
from spiderforge.core.errors import (
    Error,
    Location,
    DimMismatch,
    EmptyMask,
    RegionOverlap,
    SchemaViolation,
    UniquenessFailure,
    UnknownRegion,
)
from spiderforge.grounding import term_of_center


def _check_regions(sample, loc):
    if not sample.regions:
        raise SchemaViolation("sample has no regions", loc.at_field("regions"))

    ids = set()
    occupied = np.zeros((sample.dims[1], sample.dims[0]), dtype=bool)

    for i, region in enumerate(sample.regions):
        field = f"regions[{i}]"

        if region.id in ids:
            raise SchemaViolation(f"duplicate region id {region.id}", loc.at_field(f"{field}.id"))
        ids.add(region.id)

        if region.mask.dims != tuple(sample.dims):
            raise DimMismatch(sample.dims, region.mask.dims, loc.at_field(f"{field}.mask"))
        if region.mask.is_empty:
            raise EmptyMask(f"region {region.id} has no pixels", loc.at_field(f"{field}.mask"))
        if (occupied & region.mask.bits).any():
            raise RegionOverlap(
                f"region {region.id} overlaps an earlier region", loc.at_field(f"{field}.mask")
            )
        occupied |= region.mask.bits

        if not len(region.plan):
            raise SchemaViolation(f"region {region.id} has an empty plan", loc.at_field(f"{field}.plan"))
        try:
            region.plan.validate()
        except Error as e:
            e.location = loc.at_field(f"{field}.plan")
            raise


def _check_task(sample, task, loc, prefix):
    if task.target_region_id is None:
        if task.task == TASK_GROUNDING:
            raise SchemaViolation("grounding task without a target", loc.at_field(f"{prefix}target_region_id"))
        return

    region = sample.region_by_id(task.target_region_id)
    if region is None:
        raise UnknownRegion(
            f"no region {task.target_region_id}", loc.at_field(f"{prefix}target_region_id")
        )

    expected = term_of_center(region.center, sample.dims).phrase
    if task.answer.spatial != expected:
        raise SchemaViolation(
            f"spatial term {task.answer.spatial!r} disagrees with region center ({expected!r})",
            loc.at_field(f"{prefix}answer.spatial"),
        )

    if region.is_full_frame and task.answer.region_scope != SCOPE_GLOBAL:
        raise SchemaViolation(
            "a full-frame target must be answered with global scope",
            loc.at_field(f"{prefix}answer.region_scope"),
        )

    if task.task != TASK_GROUNDING:
        return

    if task.query is None:
        raise SchemaViolation("grounding task without a query", loc.at_field(f"{prefix}query"))

    matches = task.query.matching_regions(sample.regions)
    if matches != [region.id]:
        raise UniquenessFailure(
            f"query matches regions {matches}, target is {region.id}", loc.at_field(f"{prefix}query")
        )
    if task.query.polarity is not None and len(task.query.flipped().matching_regions(sample.regions)) != 1:
        raise UniquenessFailure(
            "query is ambiguous at the opposite polarity", loc.at_field(f"{prefix}query")
        )


def validate_sample(sample, location=None):
    """Raises the first violation found in sample; returns sample when it is well formed."""
    loc = location or Location(sample.sample_id)

    _check_regions(sample, loc)

    task_ids = set()
    for i, task in enumerate(sample.tasks):
        prefix = f"tasks[{i}]."
        if task.task_id in task_ids:
            raise SchemaViolation(f"duplicate task id {task.task_id}", loc.at_field(f"{prefix}task_id"))
        task_ids.add(task.task_id)
        _check_task(sample, task, loc, prefix)

    return sample
