"""SegmenterKind – which segmenter turns point prompts into masks."""

from enum import Enum


class SegmenterKind(Enum):
    ORACLE = "oracle"
    FLOOD_FILL = "flood-fill"
    EXTERNAL = "external"

    @classmethod
    def from_name(cls, name):
        if isinstance(name, cls):
            return name
        for kind in cls:
            if kind.value == name:
                return kind
        raise ValueError(f"unknown segmenter {name!r}; expected one of {[k.value for k in cls]}")

    @property
    def slug(self):
        return self.name.lower()

    @property
    def oracle_assisted(self):
        return self is SegmenterKind.ORACLE
