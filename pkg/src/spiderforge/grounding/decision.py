"""Grounding-skip rule – global answers take the full frame, local answers get a point."""

from dataclasses import dataclass
from typing import Optional

from spiderforge.core.constants import SCOPE_GLOBAL, SCOPE_LOCAL
from spiderforge.core.errors import MissingLogits
from spiderforge.grounding.logits import PointPrompt
from spiderforge.grounding.text_to_point import text_to_point
from spiderforge.imaging import RegionMask

SKIP = "skip"
POINT = "point"


@dataclass(frozen=True)
class GroundingDecision:
    variant: str
    point: Optional[PointPrompt] = None
    mask: Optional[RegionMask] = None

    @property
    def is_skip(self):
        return self.variant == SKIP


def ground_or_skip(answer, logits, dims, as_printed=False):
    scope = answer.region_scope if hasattr(answer, "region_scope") else answer["region_scope"]

    if scope == SCOPE_GLOBAL:
        width, height = dims
        return GroundingDecision(SKIP, mask=RegionMask.full(width, height))

    if scope != SCOPE_LOCAL:
        raise ValueError(f"unknown region scope {scope!r}")

    if logits is None:
        raise MissingLogits("answer is local in scope but no positional-term logits were supplied")

    return GroundingDecision(POINT, point=text_to_point(logits, dims, as_printed))
