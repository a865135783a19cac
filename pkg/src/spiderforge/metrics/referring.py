"""Referring metrics – keyword extraction, strict set accuracy, and a per-type F1 diagnostic."""

import re

from spiderforge.core.constants import DISTORTION_NAMES, DISTORTION_SYNONYMS
from spiderforge.core.errors import EmptyInput, LengthMismatch


def _keyword_pattern(words):
    alternatives = "|".join(re.escape(w) for w in sorted(words, key=len, reverse=True))
    return re.compile(rf"(?<![a-z])(?:{alternatives})(?![a-z])", re.IGNORECASE)


_PATTERNS = {
    name: _keyword_pattern((name,) + DISTORTION_SYNONYMS.get(name, ()))
    for name in DISTORTION_NAMES
}


def extract_distortion_types(text):
    """Distortion type names mentioned in free text, by canonical name or a fixed synonym."""
    return frozenset(name for name, pattern in _PATTERNS.items() if pattern.search(text or ""))


def _check_pairs(preds, gts):
    if len(preds) != len(gts):
        raise LengthMismatch(f"{len(preds)} predictions against {len(gts)} ground-truth sets")
    if not preds:
        raise EmptyInput("no referring answers to score")


def referring_accuracy(preds, gts):
    """Fraction of answers whose type set equals the ground truth exactly."""
    _check_pairs(preds, gts)
    correct = sum(1 for p, g in zip(preds, gts) if frozenset(p) == frozenset(g))
    return correct / len(preds)


def referring_f1(preds, gts):
    """Per-type F1 over all answers; types never predicted nor present map to None."""
    _check_pairs(preds, gts)

    per_type = {}
    for name in DISTORTION_NAMES:
        tp = fp = fn = 0
        for p, g in zip(preds, gts):
            in_p, in_g = name in p, name in g
            tp += in_p and in_g
            fp += in_p and not in_g
            fn += in_g and not in_p

        denom = 2 * tp + fp + fn
        per_type[name] = 2 * tp / denom if denom else None

    defined = [v for v in per_type.values() if v is not None]
    return {
        "per_type": per_type,
        "macro": sum(defined) / len(defined) if defined else None,
    }
