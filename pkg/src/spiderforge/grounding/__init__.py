"""Point-semantics package – positional-term annotation, text-to-point grounding, and the skip rule."""

from .terms import (
    PositionalTerms,
    term_of_center,
    phrase_of_terms,
    referring_phrase,
    LEFT,
    RIGHT,
    TOP,
    BOTTOM,
)
from .logits import TermLogits, PointPrompt, DEFAULT_TAU, round_point
from .text_to_point import (
    TermProbs,
    softmax_terms,
    point_from_probs,
    text_to_point,
    invert_point_to_logits,
)
from .decision import GroundingDecision, ground_or_skip, SKIP, POINT
from .intake import LogitRecord, read_logits, logit_record_to_json

__all__ = [
    "PositionalTerms",
    "term_of_center",
    "phrase_of_terms",
    "referring_phrase",
    "LEFT",
    "RIGHT",
    "TOP",
    "BOTTOM",
    "TermLogits",
    "PointPrompt",
    "DEFAULT_TAU",
    "round_point",
    "TermProbs",
    "softmax_terms",
    "point_from_probs",
    "text_to_point",
    "invert_point_to_logits",
    "GroundingDecision",
    "ground_or_skip",
    "SKIP",
    "POINT",
    "LogitRecord",
    "read_logits",
    "logit_record_to_json",
]
