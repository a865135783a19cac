import json

import numpy as np
import pytest
from scipy.stats import rankdata

from spiderforge.core.constants import TASK_REFERRING
from spiderforge.core.errors import (
    DegenerateInput,
    DegenerateMatrix,
    EmptyInput,
    EmptyResults,
    LengthMismatch,
    SchemaViolation,
)
from spiderforge.forge import read_manifest
from spiderforge.imaging import RegionMask
from spiderforge.metrics import (
    GroundingResult,
    RatingsMatrix,
    build_report,
    extract_distortion_types,
    format_report_table,
    format_verification,
    icc,
    miou_report,
    plcc,
    read_ratings,
    referring_accuracy,
    referring_f1,
    render_report,
    srcc,
    summarize_matrix,
    verification_summary,
)

from conftest import rect_mask


def _result(sub_task, pred, gt, n=0):
    return GroundingResult(f"s{n:06d}", "t00", sub_task, pred, gt)


def test_miou_report():
    full = RegionMask.full(10, 10)
    half = rect_mask(10, 10, 0, 0, 4, 9)
    results = [
        _result("HyD-G", full, full, 0),
        _result("HyD-G", half, full, 1),
        _result("SiD-G", half, half, 2),
        _result("DAO-G", rect_mask(10, 10, 5, 0, 9, 9), half, 3),
    ]
    assert [r.iou for r in results] == [1.0, 0.5, 1.0, 0.0]

    report = miou_report(results)
    assert list(report["per_sub_task"]) == ["DAO-G", "HyD-G", "SiD-G"]
    assert report["per_sub_task"]["HyD-G"] == pytest.approx(0.75)
    assert report["counts"] == {"DAO-G": 1, "HyD-G": 2, "SiD-G": 1}
    # sample-weighted: 2.5 / 4, not the mean of the three sub-task means
    assert report["average"] == pytest.approx(0.625)
    assert report["weighting"] == "sample"


def test_miou_is_order_independent(rng):
    masks = [RegionMask(rng.random((8, 8)) < 0.5) for _ in range(40)]
    results = [_result("HyD-G", a, b, n) for n, (a, b) in enumerate(zip(masks, masks[1:]))]
    forward = miou_report(results)
    backward = miou_report(results[::-1])
    assert forward["average"] == backward["average"]


def test_miou_empty():
    with pytest.raises(EmptyResults):
        miou_report([])


def test_extract_distortion_types():
    assert extract_distortion_types("Blur, Noise") == {"Blur", "Noise"}
    assert extract_distortion_types("the region looks blurry and grainy") == {"Blur", "Noise"}
    assert extract_distortion_types("JPEG ringing near the roof") == {"Compression"}
    assert extract_distortion_types("Contrast Weaken followed by Pixelate") == {
        "Contrast Weaken",
        "Pixelate",
    }
    assert extract_distortion_types("washed-out and desaturated") == {
        "Contrast Weaken",
        "Saturate Weaken",
    }
    # keywords must stand alone
    assert extract_distortion_types("noiseless unblurred") == frozenset()
    assert extract_distortion_types("") == frozenset()


def test_extraction_recovers_forged_referring_answers(forged_dir):
    checked = 0
    for sample in read_manifest(forged_dir / "manifest.jsonl"):
        for task in sample.tasks:
            if task.task != TASK_REFERRING:
                continue
            expected = set(task.answer.distortion_set)
            assert extract_distortion_types(task.answer.body) == expected
            checked += 1
    assert checked > 0


def test_referring_accuracy():
    preds = [{"Blur"}, {"Blur", "Noise"}, {"Noise"}]
    gts = [{"Blur"}, {"Noise", "Blur"}, {"Blur", "Noise"}]
    assert referring_accuracy(preds, gts) == pytest.approx(2 / 3)

    with pytest.raises(LengthMismatch):
        referring_accuracy(preds, gts[:2])
    with pytest.raises(EmptyInput):
        referring_accuracy([], [])


def test_referring_f1():
    preds = [{"Blur"}, {"Noise"}, {"Blur", "Pixelate"}]
    gts = [{"Blur"}, {"Blur"}, {"Pixelate"}]
    f1 = referring_f1(preds, gts)

    # Blur: tp 1, fp 1, fn 1
    assert f1["per_type"]["Blur"] == pytest.approx(0.5)
    assert f1["per_type"]["Noise"] == 0.0
    assert f1["per_type"]["Pixelate"] == 1.0
    assert f1["per_type"]["Compression"] is None
    assert f1["macro"] == pytest.approx(0.5)


def test_srcc_plcc_examples():
    assert srcc([1, 2, 3, 4], [10, 20, 30, 40]) == pytest.approx(1.0)
    assert srcc([1, 2, 3, 4], [4, 3, 2, 1]) == pytest.approx(-1.0)
    assert plcc([1, 2, 3], [2, 4, 6]) == pytest.approx(1.0)


def test_srcc_ties_use_average_ranks():
    x, y = [1, 2, 2, 3], [1, 3, 2, 4]
    rx, ry = rankdata(x), rankdata(y)
    assert list(rx) == [1.0, 2.5, 2.5, 4.0]
    expected = np.corrcoef(rx, ry)[0, 1]
    assert srcc(x, y) == pytest.approx(expected, abs=1e-12)


def test_plcc_matches_formula(rng):
    x = rng.normal(size=50)
    y = 0.5 * x + rng.normal(scale=0.3, size=50)
    dx, dy = x - x.mean(), y - y.mean()
    expected = (dx * dy).sum() / np.sqrt((dx * dx).sum() * (dy * dy).sum())
    assert plcc(x, y) == pytest.approx(expected, abs=1e-12)


def _increasing_remap(v, rng):
    """Some strictly increasing map applied to distinct values."""
    steps = rng.exponential(size=v.size) + 1e-3
    out = np.empty_like(v)
    out[np.argsort(v)] = np.cumsum(steps) * rng.uniform(0.1, 10.0) + rng.uniform(-5.0, 5.0)
    return out


def test_srcc_survives_increasing_transforms(rng):
    for _ in range(100):
        x = rng.normal(size=30)
        y = x + rng.normal(scale=0.8, size=30)
        base = srcc(x, y)
        assert srcc(_increasing_remap(x, rng), y) == pytest.approx(base, abs=1e-12)
        assert srcc(x, _increasing_remap(y, rng)) == pytest.approx(base, abs=1e-12)
        assert srcc(np.exp(x), y ** 3) == pytest.approx(base, abs=1e-12)


def test_srcc_matches_rank_then_pearson(rng):
    checked = 0
    for _ in range(100):
        n = int(rng.integers(5, 40))
        x = rng.integers(0, 6, size=n)
        y = rng.integers(0, 6, size=n)
        if np.ptp(x) == 0 or np.ptp(y) == 0:
            continue
        rx, ry = rankdata(x), rankdata(y)
        dx, dy = rx - rx.mean(), ry - ry.mean()
        expected = (dx * dy).sum() / np.sqrt((dx * dx).sum() * (dy * dy).sum())
        assert srcc(x, y) == pytest.approx(expected, abs=1e-10)
        checked += 1
    assert checked > 90


def test_plcc_survives_positive_affine_maps(rng):
    for _ in range(100):
        x = rng.normal(size=25)
        y = 0.3 * x + rng.normal(size=25)
        a, c = rng.uniform(0.1, 10.0, size=2)
        b, d = rng.uniform(-100.0, 100.0, size=2)
        assert plcc(a * x + b, c * y + d) == pytest.approx(plcc(x, y), abs=1e-9)


def test_correlation_degenerate_inputs():
    with pytest.raises(DegenerateInput):
        srcc([1, 2], [1, 2])
    with pytest.raises(DegenerateInput):
        plcc([3, 3, 3], [1, 2, 3])
    with pytest.raises(DegenerateInput):
        srcc([1, float("nan"), 3], [1, 2, 3])
    with pytest.raises(LengthMismatch):
        plcc([1, 2, 3], [1, 2, 3, 4])


def _icc_oracle(m):
    """ICC(2,1) from explicit two-way ANOVA mean squares."""
    m = np.asarray(m, dtype=float)
    n, k = m.shape
    grand = m.mean()
    row_means, col_means = m.mean(axis=1), m.mean(axis=0)

    msr = k * sum((r - grand) ** 2 for r in row_means) / (n - 1)
    msc = n * sum((c - grand) ** 2 for c in col_means) / (k - 1)
    resid = sum(
        (m[i, j] - row_means[i] - col_means[j] + grand) ** 2 for i in range(n) for j in range(k)
    )
    mse = resid / ((n - 1) * (k - 1))
    return (msr - mse) / (msr + (k - 1) * mse + k * (msc - mse) / n)


def test_icc_matches_anova(rng):
    checked = 0
    for _ in range(100):
        n, k = int(rng.integers(4, 16)), int(rng.integers(2, 7))
        m = rng.integers(1, 6, size=(n, k))
        if np.ptp(m.mean(axis=1)) == 0:
            continue
        assert icc(m) == pytest.approx(_icc_oracle(m), abs=1e-10)
        checked += 1
    assert checked > 90


def test_icc_ignores_a_constant_offset(rng):
    for _ in range(100):
        m = rng.integers(1, 6, size=(10, 3)).astype(float)
        if np.ptp(m.mean(axis=1)) == 0:
            continue
        shift = rng.uniform(-50.0, 50.0)
        assert icc(m + shift) == pytest.approx(icc(m), abs=1e-10)


def test_icc_perfect_agreement():
    m = [[1, 1, 1], [3, 3, 3], [5, 5, 5], [2, 2, 2]]
    assert icc(m) == pytest.approx(1.0)


def test_icc_degenerate():
    with pytest.raises(DegenerateMatrix):
        icc([[1, 2, 3]])
    with pytest.raises(DegenerateMatrix):
        icc([[1], [2]])
    with pytest.raises(DegenerateMatrix):
        icc([[4, 4], [4, 4], [4, 4]])


def test_verification_fails_at_exactly_eighty_percent():
    # instance medians are 5, 4, 3, 4, 4: 80% at or above 4 is not enough
    scores = np.array([[5, 5, 4], [4, 4, 3], [3, 3, 2], [4, 5, 4], [4, 4, 4]])
    block = summarize_matrix(RatingsMatrix("semantic", scores))

    assert block["histogram"] == {1: 0, 2: 0, 3: 1, 4: 3, 5: 1}
    assert block["proportion"] == pytest.approx(0.8)
    assert block["pass"] is False
    assert block["instances"] == 5 and block["raters"] == 3


def test_verification_median_with_even_raters():
    matrix = RatingsMatrix("spatial", np.array([[3, 4], [5, 5], [4, 5], [3, 5]]))
    assert list(matrix.instance_scores) == [3.5, 5.0, 4.5, 4.0]

    block = summarize_matrix(RatingsMatrix("semantic", np.array([[3, 5]] * 5)))
    assert block["proportion"] == 1.0
    assert block["pass"] is True
    assert block["histogram"] == {1: 0, 2: 0, 3: 0, 4: 5, 5: 0}

    block = summarize_matrix(RatingsMatrix("semantic", np.array([[3, 4]] * 5)))
    assert block["proportion"] == 0.0
    assert block["pass"] is False
    assert block["histogram"][3] == 5


def test_ratings_matrix_rejects_bad_scores():
    with pytest.raises(ValueError):
        RatingsMatrix("semantic", np.array([[0, 4]]))
    with pytest.raises(ValueError):
        RatingsMatrix("semantic", np.array([[4.5, 4.0]]))


def _write_ratings(path, rows):
    path.write_text("".join(json.dumps(r) + "\n" for r in rows))


def test_read_ratings(tmp_path):
    path = tmp_path / "ratings.jsonl"
    rows = []
    for dimension in ("semantic", "spatial", "distortion", "linguistic"):
        for item in range(6):
            rows.append({"dimension": dimension, "item": item, "ratings": [5, 4, 5]})
    _write_ratings(path, rows)

    matrices = read_ratings(path)
    assert [m.dimension for m in matrices] == ["semantic", "spatial", "distortion", "linguistic"]
    summary = verification_summary(matrices)
    assert all(block["pass"] for block in summary.values())
    assert all(block["icc"] is None for block in summary.values())
    assert "semantic" in format_verification(summary)


def test_read_ratings_errors(tmp_path):
    path = tmp_path / "ratings.jsonl"

    _write_ratings(path, [{"dimension": "semantic", "item": 0, "ratings": [5, 6]}])
    with pytest.raises(SchemaViolation) as info:
        read_ratings(path)
    assert info.value.location.field == "ratings"

    _write_ratings(path, [{"dimension": "semantic", "item": 0, "ratings": [5, 4]}])
    with pytest.raises(SchemaViolation):
        read_ratings(path)

    path.write_text("")
    with pytest.raises(EmptyInput):
        read_ratings(path)

    with pytest.raises(EmptyInput):
        verification_summary([])


def test_report_rendering(tmp_path):
    grounding = miou_report([_result("HyD-G", RegionMask.full(4, 4), RegionMask.full(4, 4))])
    report = build_report({"seed": 7}, grounding=grounding)
    render_report(report, tmp_path / "report.json")

    loaded = json.loads((tmp_path / "report.json").read_text())
    assert loaded["grounding"]["average"] == 1.0
    assert loaded["referring"] is None
    assert "mIoU HyD-G" in format_report_table(report)
    assert format_report_table(build_report({})) == "nothing to report\n"
