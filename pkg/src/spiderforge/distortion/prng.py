"""Counter-based Gaussian generator for the Noise operator.

Draw i of the 64-bit stream is the SplitMix64 finalizer applied to
seed + (i + 1) * GAMMA (mod 2**64). Normal deviate k takes draws 2k and
2k + 1 through Box–Muller:

    u1 = ((b[2k] >> 11) + 1) * 2**-53      in (0, 1]
    u2 = (b[2k+1] >> 11) * 2**-53          in [0, 1)
    z  = sqrt(-2 ln u1) * cos(2 pi u2)

The stream depends only on the seed, so any worker reproduces it.
"""

import numpy as np

GAMMA = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB

_U64 = np.uint64


def splitmix64_stream(seed, count):
    i = np.arange(1, count + 1, dtype=np.uint64)
    z = _U64(seed & 0xFFFFFFFFFFFFFFFF) + i * _U64(GAMMA)
    z = (z ^ (z >> _U64(30))) * _U64(MIX1)
    z = (z ^ (z >> _U64(27))) * _U64(MIX2)
    return z ^ (z >> _U64(31))


def gaussian_stream(seed, count):
    bits = splitmix64_stream(seed, 2 * count)
    scale = 2.0**-53

    u1 = ((bits[0::2] >> _U64(11)).astype(np.float64) + 1.0) * scale
    u2 = (bits[1::2] >> _U64(11)).astype(np.float64) * scale

    return np.sqrt(-2.0 * np.log(u1)) * np.cos(2.0 * np.pi * u2)
