"""Distortion package – operator types, plans, legality table, and the region-level engine."""

from .distortion_type import DistortionType
from .plan import DistortionSpec, DistortionPlan
from .order import validate_order, legal_orders, cumulative_intensity, type_intensity
from .prng import splitmix64_stream, gaussian_stream
from .engine import DistortionEngine, apply_operator, apply_plan, render_sample
from .mixins.blur import gaussian_blur
from .mixins.noise import add_gaussian_noise
from .mixins.compression import block_dct_quantize
from .mixins.pixelate import pixelate
from .mixins.tone import weaken_contrast, weaken_saturation

__all__ = [
    "DistortionType",
    "DistortionSpec",
    "DistortionPlan",
    "validate_order",
    "legal_orders",
    "cumulative_intensity",
    "type_intensity",
    "splitmix64_stream",
    "gaussian_stream",
    "DistortionEngine",
    "apply_operator",
    "apply_plan",
    "render_sample",
    "gaussian_blur",
    "add_gaussian_noise",
    "block_dct_quantize",
    "pixelate",
    "weaken_contrast",
    "weaken_saturation",
]
