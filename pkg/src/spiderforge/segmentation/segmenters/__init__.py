from .oracle import segment_oracle
from .flood_fill import segment_flood_fill

__all__ = ["segment_oracle", "segment_flood_fill"]
