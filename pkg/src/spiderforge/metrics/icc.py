"""ICC(2,1) – two-way random effects, absolute agreement, single rater."""

import numpy as np

from spiderforge.core.errors import DegenerateMatrix


def icc(matrix):
    """matrix rows are rated items, columns are raters."""
    m = np.asarray(matrix, dtype=np.float64)
    if m.ndim != 2:
        raise DegenerateMatrix(f"ratings must form a 2-D matrix, got shape {m.shape}")

    n, k = m.shape
    if n < 2 or k < 2:
        raise DegenerateMatrix(f"need at least 2 items and 2 raters, got {n}x{k}")

    grand = m.mean()
    ss_total = ((m - grand) ** 2).sum()
    ss_rows = k * ((m.mean(axis=1) - grand) ** 2).sum()
    ss_cols = n * ((m.mean(axis=0) - grand) ** 2).sum()
    ss_err = ss_total - ss_rows - ss_cols

    ms_r = ss_rows / (n - 1)
    ms_c = ss_cols / (k - 1)
    ms_e = ss_err / ((n - 1) * (k - 1))

    if np.isclose(ss_rows, 0.0, atol=1e-12):
        raise DegenerateMatrix("items do not vary, so agreement is undefined")

    return float((ms_r - ms_e) / (ms_r + (k - 1) * ms_e + (k / n) * (ms_c - ms_e)))
