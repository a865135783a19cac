"""Accumulation-order legality and intensity aggregates over distortion plans."""

from spiderforge.core.constants import LEGAL_SECOND
from spiderforge.distortion.distortion_type import DistortionType

_LEGAL_PAIRS = frozenset(
    (DistortionType(first), DistortionType(second))
    for first, seconds in LEGAL_SECOND.items()
    for second in seconds
)


def validate_order(first, second):
    return (first, second) in _LEGAL_PAIRS


def legal_orders():
    """All legal (first, second) pairs in table order."""
    return [
        (DistortionType(first), DistortionType(second))
        for first, seconds in LEGAL_SECOND.items()
        for second in seconds
    ]


def cumulative_intensity(plan):
    return sum(spec.level for spec in plan.specs)


def type_intensity(plan, kind):
    return sum(spec.level for spec in plan.specs if spec.kind is kind)
