"""Additive Gaussian noise operator, driven by the counter-based generator."""

from spiderforge.core.constants import NOISE_SIGMAS
from spiderforge.distortion.prng import gaussian_stream
from spiderforge.imaging import ImageBuffer


def add_gaussian_noise(img, sigma, seed):
    """sigma is in 8-bit code values; draws are consumed in row-major (y, x, channel) order."""
    values = img.as_float()
    z = gaussian_stream(seed, values.size).reshape(values.shape)
    return ImageBuffer.from_float(values + sigma * z)


class NoiseOperator:
    def apply_noise(self, img, spec):
        return add_gaussian_noise(img, NOISE_SIGMAS[spec.level - 1], spec.seed)
