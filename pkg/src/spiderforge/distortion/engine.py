"""Distortion engine.

Composes the six synthetic operators behind one dispatch point and
applies region-restricted plans, clipping to the region mask after every
operator so the accumulation order stays visible inside the region.
"""

from spiderforge.distortion.mixins import (
    EngineBase,
    BlurOperator,
    NoiseOperator,
    CompressionOperator,
    PixelateOperator,
    ToneOperators,
)


class DistortionEngine(
    EngineBase,
    BlurOperator,
    NoiseOperator,
    CompressionOperator,
    PixelateOperator,
    ToneOperators,
):
    def render_sample(self, base, regions):
        """Applies every region's plan in region-id order."""
        img = base
        for region in sorted(regions, key=lambda r: r.id):
            img = self.apply_plan(img, region.plan, region.mask)
        return img


_default_engine = DistortionEngine()


def apply_operator(img, spec):
    return _default_engine.apply_operator(img, spec)


def apply_plan(img, plan, region=None):
    return _default_engine.apply_plan(img, plan, region)


def render_sample(base, regions):
    return _default_engine.render_sample(base, regions)
