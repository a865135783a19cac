"""Gaussian blur operator."""

from scipy import ndimage

from spiderforge.core.constants import BLUR_SIGMAS
from spiderforge.imaging import ImageBuffer


def gaussian_blur(img, sigma):
    out = ndimage.gaussian_filter(img.as_float(), sigma=(sigma, sigma, 0), mode="reflect")
    return ImageBuffer.from_float(out)


class BlurOperator:
    def apply_blur(self, img, spec):
        return gaussian_blur(img, BLUR_SIGMAS[spec.level - 1])
