"""Oracle segmenter – answers a point prompt with the ground-truth region under it."""

import math

from spiderforge.core.errors import NoRegions
from spiderforge.grounding import round_point


def segment_oracle(point, regions):
    """Returns the mask containing the rounded point, else the mask whose bbox center is nearest."""
    if not regions:
        raise NoRegions("the oracle segmenter needs at least one region mask")

    x, y = round_point(point, regions[0].dims)
    for mask in regions:
        if mask.contains(x, y):
            return mask

    def distance(mask):
        cx, cy = mask.center
        return math.hypot(point.x - cx, point.y - cy)

    return min(regions, key=distance)
