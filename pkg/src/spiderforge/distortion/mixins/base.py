"""Operator dispatch, plan application, and region-restricted compositing."""

from spiderforge.core.errors import DimMismatch, InvalidLevel
from spiderforge.core.constants import LEVELS
from spiderforge.imaging import composite_by_mask


class EngineBase:
    def __init__(self):
        self.dispatch_cache = {}

    def apply_operator(self, img, spec):
        if spec.level not in LEVELS:
            raise InvalidLevel(f"level must be one of 1..5, got {spec.level!r}")

        kind = spec.kind
        method = self.dispatch_cache.get(kind)

        if method is None:
            method_name = f"apply_{kind.slug}"
            method = getattr(self, method_name, self.no_apply_method)
            self.dispatch_cache[kind] = method

        return method(img, spec)

    def no_apply_method(self, img, spec):
        raise Exception(f"No apply_{spec.kind.slug} method defined")

    def apply_plan(self, img, plan, region=None):
        """Runs each operator over the full frame, then clips it to the region.

        The next operator sees the already-degraded region, so order matters
        inside the mask while nothing outside the mask ever changes.
        """
        plan.validate()

        region = region if region is not None else plan.region
        if region is not None and region.dims != img.dims:
            raise DimMismatch(img.dims, region.dims)

        current = img
        for spec in plan.specs:
            degraded = self.apply_operator(current, spec)
            current = (
                degraded
                if region is None
                else composite_by_mask(current, degraded, region)
            )

        return current
