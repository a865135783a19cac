"""SRCC and PLCC between predicted and reference quality scores."""

import numpy as np
from scipy.stats import pearsonr, spearmanr

from spiderforge.core.errors import DegenerateInput, LengthMismatch

MIN_POINTS = 3


def _as_pair(x, y):
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)

    if x.shape != y.shape or x.ndim != 1:
        raise LengthMismatch(f"score lists differ in shape: {x.shape} vs {y.shape}")
    if x.size < MIN_POINTS:
        raise DegenerateInput(f"need at least {MIN_POINTS} scores, got {x.size}")
    if not (np.isfinite(x).all() and np.isfinite(y).all()):
        raise DegenerateInput("scores must be finite")
    if np.ptp(x) == 0 or np.ptp(y) == 0:
        raise DegenerateInput("correlation is undefined for a constant score list")

    return x, y


def srcc(x, y):
    x, y = _as_pair(x, y)
    return float(spearmanr(x, y)[0])


def plcc(x, y):
    x, y = _as_pair(x, y)
    return float(pearsonr(x, y)[0])
