"""Grounding metrics – per-sample IoU and the per-sub-task mIoU table."""

import math
from dataclasses import dataclass, field

from spiderforge.core.constants import GROUNDING_SUB_TASKS
from spiderforge.core.errors import EmptyResults
from spiderforge.imaging import RegionMask, mask_iou

WEIGHTING_SAMPLE = "sample"


@dataclass(frozen=True)
class GroundingResult:
    sample_id: str
    task_id: str
    sub_task: str
    pred_mask: RegionMask = field(repr=False)
    gt_mask: RegionMask = field(repr=False)
    iou: float = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "iou", mask_iou(self.pred_mask, self.gt_mask))


def _mean(values):
    # fsum keeps the mean independent of result order
    return math.fsum(values) / len(values)


def miou_report(results):
    """Mean IoU per grounding sub-task and over every result (sample-weighted)."""
    if not results:
        raise EmptyResults("no grounding results to average")

    by_sub = {}
    for r in results:
        by_sub.setdefault(r.sub_task, []).append(r.iou)

    order = [s for s in GROUNDING_SUB_TASKS if s in by_sub]
    order += sorted(s for s in by_sub if s not in GROUNDING_SUB_TASKS)

    return {
        "per_sub_task": {s: _mean(by_sub[s]) for s in order},
        "counts": {s: len(by_sub[s]) for s in order},
        "average": _mean([r.iou for r in results]),
        "weighting": WEIGHTING_SAMPLE,
    }
