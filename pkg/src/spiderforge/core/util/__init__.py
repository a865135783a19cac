"""Utility functions – seed derivation, JSON lines, rounding, and locking."""

from .seeding import derive_seed, make_rng, draw_seed
from .jsonl import dumps_canonical, write_json_lines, read_json_lines, write_json
from .rounding import round_half_away, clamp
from .locking import _NoLock

__all__ = [
    "derive_seed",
    "make_rng",
    "draw_seed",
    "dumps_canonical",
    "write_json_lines",
    "read_json_lines",
    "write_json",
    "round_half_away",
    "clamp",
    "_NoLock",
]
