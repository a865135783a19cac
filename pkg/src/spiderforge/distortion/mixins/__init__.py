"""Export all distortion engine component classes for composition."""

from .base import EngineBase
from .blur import BlurOperator
from .noise import NoiseOperator
from .compression import CompressionOperator
from .pixelate import PixelateOperator
from .tone import ToneOperators

__all__ = [
    "EngineBase",
    "BlurOperator",
    "NoiseOperator",
    "CompressionOperator",
    "PixelateOperator",
    "ToneOperators",
]
