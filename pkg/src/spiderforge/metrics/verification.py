"""Dataset verification – rating matrices per dimension, medians, and the pass rule."""

import logging
from dataclasses import dataclass

import numpy as np

from spiderforge.core.constants import VERIFICATION_DIMENSIONS
from spiderforge.core.errors import DegenerateMatrix, EmptyInput, Location, SchemaViolation
from spiderforge.core.util import read_json_lines
from spiderforge.metrics.icc import icc

logger = logging.getLogger(__name__)

PASS_SCORE = 4
PASS_PROPORTION = 0.80
SCALE = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class RatingsMatrix:
    dimension: str
    scores: np.ndarray

    def __post_init__(self):
        scores = np.asarray(self.scores)
        if scores.ndim != 2 or scores.size == 0:
            raise ValueError(f"{self.dimension}: ratings must be a non-empty items x raters grid")
        if not np.issubdtype(scores.dtype, np.integer):
            raise ValueError(f"{self.dimension}: ratings must be integers")
        if scores.min() < SCALE[0] or scores.max() > SCALE[-1]:
            raise ValueError(f"{self.dimension}: ratings must lie on the 1..5 scale")
        object.__setattr__(self, "scores", scores)

    @property
    def instance_scores(self):
        return np.median(self.scores, axis=1)


def summarize_matrix(matrix):
    medians = matrix.instance_scores
    # half-point medians from an even rater count fall into the bin below
    bins = np.floor(medians)
    histogram = {s: int(np.count_nonzero(bins == s)) for s in SCALE}
    proportion = float(np.count_nonzero(medians >= PASS_SCORE)) / medians.size

    try:
        agreement = icc(matrix.scores)
    except DegenerateMatrix:
        agreement = None

    return {
        "instances": int(medians.size),
        "raters": int(matrix.scores.shape[1]),
        "histogram": histogram,
        "proportion": proportion,
        "pass": proportion > PASS_PROPORTION,
        "icc": agreement,
    }


def verification_summary(matrices):
    if not matrices:
        raise EmptyInput("no rating matrices to summarize")
    return {m.dimension: summarize_matrix(m) for m in matrices}


def read_ratings(path):
    """Reads {"dimension", "item", "ratings": [...]} lines into one RatingsMatrix per dimension."""
    rows = {}
    seen_any = False

    for ln, obj in read_json_lines(path):
        seen_any = True
        loc = Location(str(path), ln)

        dimension = obj.get("dimension")
        if dimension not in VERIFICATION_DIMENSIONS:
            raise SchemaViolation(f"unknown dimension {dimension!r}", loc.at_field("dimension"))

        ratings = obj.get("ratings")
        if (
            not isinstance(ratings, list)
            or not ratings
            or not all(isinstance(r, int) and not isinstance(r, bool) for r in ratings)
        ):
            raise SchemaViolation("ratings must be a non-empty list of integers", loc.at_field("ratings"))
        if any(r not in SCALE for r in ratings):
            raise SchemaViolation("ratings must lie on the 1..5 scale", loc.at_field("ratings"))

        previous = rows.get(dimension)
        if previous and len(previous[0]) != len(ratings):
            raise SchemaViolation(
                f"expected {len(previous[0])} raters for {dimension}, got {len(ratings)}",
                loc.at_field("ratings"),
            )
        rows.setdefault(dimension, []).append(ratings)

    if not seen_any:
        raise EmptyInput(f"{path} holds no ratings")

    missing = [d for d in VERIFICATION_DIMENSIONS if d not in rows]
    if missing:
        raise SchemaViolation(f"no ratings for {', '.join(missing)}", Location(str(path)))

    logger.info("read ratings for %d dimensions from %s", len(rows), path)
    return [
        RatingsMatrix(d, np.asarray(rows[d], dtype=np.int64)) for d in VERIFICATION_DIMENSIONS
    ]


def format_verification(summary):
    lines = [f"{'dimension':<12} {'n':>5} {'>=4':>7} {'icc':>7}  verdict"]
    for dimension, block in summary.items():
        agreement = "-" if block["icc"] is None else f"{block['icc']:.3f}"
        verdict = "pass" if block["pass"] else "FAIL"
        lines.append(
            f"{dimension:<12} {block['instances']:>5} {block['proportion']:>7.3f} {agreement:>7}  {verdict}"
        )
    return "\n".join(lines) + "\n"
