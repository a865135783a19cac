"""TermLogits and PointPrompt – the inputs and outputs of text-to-point."""

import math
from dataclasses import dataclass

from spiderforge.core.errors import NonPositiveTau, OutOfFrame
from spiderforge.core.util import round_half_away, clamp

DEFAULT_TAU = 1.0


@dataclass(frozen=True)
class TermLogits:
    chi_left: float
    chi_right: float
    chi_top: float
    chi_bottom: float
    tau: float = DEFAULT_TAU

    def __post_init__(self):
        if not self.tau > 0:
            raise NonPositiveTau(f"temperature must be positive, got {self.tau!r}")

        for name in ("chi_left", "chi_right", "chi_top", "chi_bottom", "tau"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    @classmethod
    def from_json(cls, chi, tau=DEFAULT_TAU):
        return cls(
            float(chi["left"]),
            float(chi["right"]),
            float(chi["top"]),
            float(chi["bottom"]),
            float(tau),
        )

    def to_json(self):
        return {
            "chi": {
                "left": self.chi_left,
                "right": self.chi_right,
                "top": self.chi_top,
                "bottom": self.chi_bottom,
            },
            "tau": self.tau,
        }


@dataclass(frozen=True)
class PointPrompt:
    x: float
    y: float

    def check_frame(self, dims):
        width, height = dims
        if not (0 <= self.x <= width and 0 <= self.y <= height):
            raise OutOfFrame(f"point ({self.x}, {self.y}) lies outside the {width}x{height} frame")
        return self

    def as_tuple(self):
        return (self.x, self.y)


def round_point(point, dims):
    """Integer pixel of a point prompt: half away from zero, then clamped into the frame."""
    width, height = dims
    return (
        clamp(round_half_away(point.x), 0, width - 1),
        clamp(round_half_away(point.y), 0, height - 1),
    )
