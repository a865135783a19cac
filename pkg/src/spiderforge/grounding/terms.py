"""Positional terms – quantizing a bbox center into {left, right} × {top, bottom}."""

from dataclasses import dataclass

from spiderforge.core.errors import OutOfFrame

LEFT, RIGHT = "left", "right"
TOP, BOTTOM = "top", "bottom"

# Index i of each vocabulary is the normalized coordinate the term maps to.
X_TERMS = (LEFT, RIGHT)
Y_TERMS = (TOP, BOTTOM)


@dataclass(frozen=True)
class PositionalTerms:
    t_x: str
    t_y: str

    def __post_init__(self):
        if self.t_x not in X_TERMS or self.t_y not in Y_TERMS:
            raise ValueError(f"unknown positional terms ({self.t_x!r}, {self.t_y!r})")

    @property
    def phrase(self):
        return f"{self.t_y}-{self.t_x}"

    @classmethod
    def from_phrase(cls, phrase):
        t_y, _, t_x = phrase.partition("-")
        return cls(t_x, t_y)


def term_of_center(center, dims):
    """Intervals are [0, 1/2) and [1/2, 1]; a ratio of exactly 1/2 goes right or bottom."""
    x, y = center
    width, height = dims

    if width < 1 or height < 1:
        raise OutOfFrame(f"frame must be at least 1x1, got {width}x{height}")

    rx = x / width
    ry = y / height

    if not (0.0 <= rx <= 1.0) or not (0.0 <= ry <= 1.0):
        raise OutOfFrame(f"center ({x}, {y}) lies outside the {width}x{height} frame")

    return PositionalTerms(
        LEFT if rx < 0.5 else RIGHT,
        TOP if ry < 0.5 else BOTTOM,
    )


def phrase_of_terms(terms):
    return terms.phrase


def referring_phrase(label, terms):
    return f"the {label} at the {terms.phrase}"
