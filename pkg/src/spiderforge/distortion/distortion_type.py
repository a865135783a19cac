"""DistortionType – the six synthetic distortion kinds, keyed by their manifest spelling."""

from enum import Enum

from spiderforge.core.constants import (
    DT_BLUR,
    DT_NOISE,
    DT_COMPRESSION,
    DT_PIXELATE,
    DT_CONTRAST_WEAKEN,
    DT_SATURATE_WEAKEN,
    EFFECT_CLAUSES,
)


class DistortionType(Enum):
    BLUR = DT_BLUR
    NOISE = DT_NOISE
    COMPRESSION = DT_COMPRESSION
    PIXELATE = DT_PIXELATE
    CONTRAST_WEAKEN = DT_CONTRAST_WEAKEN
    SATURATE_WEAKEN = DT_SATURATE_WEAKEN

    @classmethod
    def from_name(cls, name):
        try:
            return cls(name)
        except ValueError:
            raise ValueError(f"unknown distortion type {name!r}") from None

    @property
    def slug(self):
        return self.name.lower()

    @property
    def phrase(self):
        return self.value.lower()

    @property
    def effect(self):
        return EFFECT_CLAUSES[self.value]

    def __str__(self):
        return self.value
