"""Export all task forge component classes for composition."""

from .base import ForgeBase
from .descriptions import ForgeDescriptions
from .grounding import ForgeGrounding
from .referring import ForgeReferring

__all__ = [
    "ForgeBase",
    "ForgeDescriptions",
    "ForgeGrounding",
    "ForgeReferring",
]
