"""Text-to-point – temperature softmax over positional-term logits, then a weighted average.

For each axis the two terms get probabilities p_i = softmax(chi / tau)_i and
the coordinate is sum(i * p_i) * size, with left/top at index 0 and
right/bottom at index 1. That sum reduces to x = p_right * W and
y = p_bottom * H.

The printed form of the softmax divides exp(chi) by tau in both the
numerator and the denominator, so tau cancels. ``as_printed=True``
reproduces that reading.
"""

import math
from typing import NamedTuple

import numpy as np
from scipy.special import softmax, logit

from spiderforge.core.errors import (
    BoundaryPoint,
    NonPositiveTau,
    OutOfFrame,
    UnnormalizedProbs,
)
from spiderforge.grounding.logits import TermLogits, PointPrompt, DEFAULT_TAU

PROB_TOLERANCE = 1e-9


class TermProbs(NamedTuple):
    p_left: float
    p_right: float
    p_top: float
    p_bottom: float


def softmax_terms(logits, as_printed=False):
    if not logits.tau > 0:
        raise NonPositiveTau(f"temperature must be positive, got {logits.tau!r}")

    scale = 1.0 if as_printed else 1.0 / logits.tau

    px = softmax(np.array([logits.chi_left, logits.chi_right]) * scale)
    py = softmax(np.array([logits.chi_top, logits.chi_bottom]) * scale)

    return TermProbs(float(px[0]), float(px[1]), float(py[0]), float(py[1]))


def point_from_probs(probs, dims):
    width, height = dims
    x_probs = (probs.p_left, probs.p_right)
    y_probs = (probs.p_top, probs.p_bottom)

    for axis, pair in (("x", x_probs), ("y", y_probs)):
        if abs(sum(pair) - 1.0) > PROB_TOLERANCE or min(pair) < 0:
            raise UnnormalizedProbs(f"{axis}-axis probabilities {pair} do not sum to 1")

    x = sum(i * p for i, p in enumerate(x_probs)) * width
    y = sum(i * p for i, p in enumerate(y_probs)) * height

    return PointPrompt(x, y)


def text_to_point(logits, dims, as_printed=False):
    return point_from_probs(softmax_terms(logits, as_printed), dims)


def invert_point_to_logits(target, dims, tau=DEFAULT_TAU, as_printed=False):
    """Builds logits whose forward mapping lands back on target.

    The gap chi_right - chi_left is tau * logit(x / W) and the two logits
    are placed symmetrically about zero; likewise for y.
    """
    if not tau > 0:
        raise NonPositiveTau(f"temperature must be positive, got {tau!r}")

    width, height = dims
    px = target.x / width
    py = target.y / height

    for axis, p in (("x", px), ("y", py)):
        if p < 0.0 or p > 1.0 or math.isnan(p):
            raise OutOfFrame(f"{axis} ratio {p} lies outside the frame")
        if p == 0.0 or p == 1.0:
            raise BoundaryPoint(
                f"{axis} ratio {p} sits on the frame edge and needs an infinite logit gap"
            )

    scale = 1.0 if as_printed else tau
    gap_x = scale * float(logit(px))
    gap_y = scale * float(logit(py))

    return TermLogits(-gap_x / 2, gap_x / 2, -gap_y / 2, gap_y / 2, tau)
