"""Contrast and saturation weakening operators."""

from spiderforge.core.constants import CONTRAST_FACTORS, SATURATION_FACTORS
from spiderforge.imaging import ImageBuffer


def weaken_contrast(img, factor):
    x = img.as_float()
    mu = x.mean(axis=(0, 1))
    return ImageBuffer.from_float(mu + (x - mu) * factor)


def weaken_saturation(img, factor):
    """Scales HSL saturation by factor.

    With hue and lightness fixed, every channel is L plus a term linear in
    chroma, so scaling saturation is out = L + factor * (in - L) with
    L = (max + min) / 2 per pixel.
    """
    x = img.as_float()
    lightness = (x.max(axis=2, keepdims=True) + x.min(axis=2, keepdims=True)) / 2.0
    return ImageBuffer.from_float(lightness + factor * (x - lightness))


class ToneOperators:
    def apply_contrast_weaken(self, img, spec):
        return weaken_contrast(img, CONTRAST_FACTORS[spec.level - 1])

    def apply_saturate_weaken(self, img, spec):
        return weaken_saturation(img, SATURATION_FACTORS[spec.level - 1])
