"""Seed derivation – stable 64-bit child seeds so every sample is reproducible on its own."""

import hashlib

import numpy as np

MASK64 = 0xFFFFFFFFFFFFFFFF


def derive_seed(seed, *labels):
    h = hashlib.blake2b(digest_size=8)
    h.update(str(int(seed) & MASK64).encode("ascii"))

    for label in labels:
        h.update(b"\x1f")
        h.update(str(label).encode("utf-8"))

    return int.from_bytes(h.digest(), "little")


def make_rng(seed, *labels):
    return np.random.Generator(np.random.PCG64(derive_seed(seed, *labels)))


def draw_seed(rng):
    return int(rng.integers(0, 2**64, dtype=np.uint64))
