import json
import shlex

import pytest

from spiderforge.cli.main import main
from spiderforge.commands import (
    RunConfig,
    cmd_eval,
    cmd_forge,
    cmd_ground,
    cmd_validate,
    load_config,
    oracle_target,
)
from spiderforge.core.constants import (
    EXIT_CONFIG,
    EXIT_EVAL,
    EXIT_GROUND,
    EXIT_OK,
    EXIT_VALIDATE_FAIL,
    SCOPE_LOCAL,
    TASK_GROUNDING,
    TASK_REFERRING,
)
from spiderforge.core.errors import ConfigError, IdMismatch, MissingLogits
from spiderforge.forge import read_manifest
from spiderforge.grounding import LogitRecord, invert_point_to_logits, logit_record_to_json

from conftest import forge_config, stub_peer_command


def _jsonl(path, rows):
    path.write_text("".join(json.dumps(r) + "\n" for r in rows))
    return str(path)


def _ground_config(out, manifest, **overrides):
    config = RunConfig()
    config.paths.out_dir = str(out)
    config.paths.manifest = str(manifest)
    for key, value in overrides.items():
        setattr(config, key, value)
    return config


def _eval_config(out, manifest, predictions, answers=None, scores=None):
    config = RunConfig()
    config.paths.out_dir = str(out)
    config.paths.manifest = str(manifest)
    config.paths.predictions = str(predictions)
    config.paths.answers = answers
    config.paths.scores = scores
    return config


def test_config_layers(tmp_path):
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"seed": 3, "workers": 2, "dims": [32, 48], "paths": {"out_dir": "from-file"}}))
    environ = {"SPIDERFORGE_OUT_DIR": "from-env", "SPIDERFORGE_WORKERS": "3"}

    config = load_config({"workers": 4}, config_file=path, environ=environ)
    assert config.seed == 3
    assert config.dims == (32, 48)
    assert config.paths.out_dir == "from-env"
    assert config.workers == 4

    defaults = load_config({}, environ={})
    assert defaults.seed == 7 and defaults.workers == 1 and defaults.paths.out_dir == "out"


def test_config_errors(tmp_path):
    with pytest.raises(ConfigError) as info:
        load_config({"sead": 1}, environ={})
    assert info.value.location.field == "sead"

    with pytest.raises(ConfigError):
        load_config({}, environ={"SPIDERFORGE_WORKERS": "many"})

    path = tmp_path / "broken.json"
    path.write_text("{\n  oops")
    with pytest.raises(ConfigError) as info:
        load_config({}, config_file=path, environ={})
    assert info.value.location.ln == 2

    with pytest.raises(ConfigError):
        load_config({}, config_file=tmp_path / "missing.json", environ={})


@pytest.mark.parametrize(
    "overrides",
    [
        {"sample_count": 0},
        {"dims": (8, 64)},
        {"region_count": (1, 3)},
        {"task_mix": {"global": 0}},
        {"uniform_ratio": 1.5},
        {"mask_format": "bmp"},
        {"workers": 0},
    ],
)
def test_forge_rejects_bad_settings(tmp_path, overrides):
    res = cmd_forge(forge_config(tmp_path / "out", **overrides))
    assert res.exit_code == EXIT_CONFIG
    assert isinstance(res.error, ConfigError)
    assert not (tmp_path / "out" / "manifest.jsonl").exists()


def test_forge_is_byte_identical(tmp_path):
    outputs = []
    for name, workers in (("a", 1), ("b", 1), ("c", 2)):
        out = tmp_path / name
        res = cmd_forge(forge_config(out, workers=workers))
        assert res.ok, res.error
        outputs.append(out)

    first = outputs[0]
    for other in outputs[1:]:
        assert (other / "manifest.jsonl").read_bytes() == (first / "manifest.jsonl").read_bytes()
        assert (other / "statistics.json").read_bytes() == (first / "statistics.json").read_bytes()
        for image in (first / "images").iterdir():
            assert (other / "images" / image.name).read_bytes() == image.read_bytes()

    different = cmd_forge(forge_config(tmp_path / "d", seed=8))
    assert different.ok
    assert (tmp_path / "d" / "manifest.jsonl").read_bytes() != (first / "manifest.jsonl").read_bytes()


def test_forge_writes_run_files(forged_dir):
    stats = json.loads((forged_dir / "statistics.json").read_text())
    echo = json.loads((forged_dir / "run_config.json").read_text())
    assert stats["samples"] == 20
    assert echo["command"] == "forge"
    assert echo["seed"] == 7 and echo["dims"] == [64, 64]


def test_oracle_target_stays_inside():
    point = oracle_target((0.0, 63.0), (64, 64))
    assert 0 < point.x < 64 and 0 < point.y < 64
    assert oracle_target((10.0, 20.0), (64, 64)).as_tuple() == (10.0, 20.0)


def test_closed_loop_reaches_perfect_miou(tmp_path):
    forged = tmp_path / "forged"
    assert cmd_forge(forge_config(forged, sample_count=50)).ok
    manifest = forged / "manifest.jsonl"

    res = cmd_ground(_ground_config(tmp_path / "ground", manifest, oracle_logits=True, workers=3))
    assert res.ok, res.error
    predictions = tmp_path / "ground" / "predictions.jsonl"
    rows = [json.loads(line) for line in predictions.read_text().splitlines()]
    assert len(rows) == res.value["predictions"] > 0
    assert all(row["oracle_assisted"] for row in rows)
    assert all((row["segmenter"] is None) == (row["decision"] == "skip") for row in rows)

    samples = read_manifest(manifest)
    answers = _jsonl(
        tmp_path / "answers.jsonl",
        [
            {"sample_id": s.sample_id, "task_id": t.task_id, "answer_text": t.answer.body}
            for s in samples
            for t in s.tasks
            if t.task == TASK_REFERRING
        ],
    )
    scores = _jsonl(
        tmp_path / "scores.jsonl",
        [{"id": f"i{n}", "predicted": n * 0.5, "reference": n * 2.0 + 1} for n in range(6)],
    )

    res = cmd_eval(_eval_config(tmp_path / "eval", manifest, predictions, answers, scores))
    assert res.ok, res.error
    report = json.loads((tmp_path / "eval" / "report.json").read_text())

    assert report["grounding"]["average"] == pytest.approx(1.0)
    assert all(v == pytest.approx(1.0) for v in report["grounding"]["per_sub_task"].values())
    assert report["weighting"] == "sample"
    assert report["referring"]["accuracy"] == 1.0
    assert report["scoring"]["srcc"] == pytest.approx(1.0)
    assert report["scoring"]["plcc"] == pytest.approx(1.0)


def _local_grounding(samples):
    return [
        (s, t)
        for s in samples
        for t in s.tasks
        if t.task == TASK_GROUNDING and t.answer.region_scope == SCOPE_LOCAL
    ]


def _logit_rows(samples, tau=1.0):
    rows = []
    for sample, task in _local_grounding(samples):
        target = sample.region_by_id(task.target_region_id)
        logits = invert_point_to_logits(oracle_target(target.center, sample.dims), sample.dims, tau)
        rows.append(logit_record_to_json(LogitRecord(sample.sample_id, task.task_id, logits, SCOPE_LOCAL)))
    return rows


def test_ground_from_logit_file(tmp_path, forged_dir):
    manifest = forged_dir / "manifest.jsonl"
    samples = read_manifest(manifest)
    logits = _jsonl(tmp_path / "logits.jsonl", _logit_rows(samples, tau=2.0))

    config = _ground_config(tmp_path / "ground", manifest, segmenter="flood-fill")
    config.paths.logits = logits
    res = cmd_ground(config)
    assert res.ok, res.error

    rows = [json.loads(line) for line in (tmp_path / "ground" / "predictions.jsonl").read_text().splitlines()]
    points = [row for row in rows if row["decision"] == "point"]
    assert len(points) == len(_local_grounding(samples))
    assert all(row["segmenter"] == "flood-fill" and not row["oracle_assisted"] for row in points)


def test_ground_missing_logits(tmp_path, forged_dir):
    logits = tmp_path / "logits.jsonl"
    logits.write_text("")
    config = _ground_config(tmp_path / "ground", forged_dir / "manifest.jsonl")
    config.paths.logits = str(logits)

    res = cmd_ground(config)
    assert res.exit_code == EXIT_GROUND
    assert isinstance(res.error, MissingLogits)

    config.paths.logits = None
    assert cmd_ground(config).exit_code == EXIT_CONFIG


def test_ground_with_external_peer(tmp_path, forged_dir):
    manifest = forged_dir / "manifest.jsonl"
    command = " ".join(shlex.quote(part) for part in stub_peer_command("ok"))
    config = _ground_config(
        tmp_path / "ground",
        manifest,
        oracle_logits=True,
        segmenter="external",
        peer_command=command,
        peers=2,
        workers=2,
    )
    res = cmd_ground(config)
    assert res.ok, res.error

    rows = [json.loads(line) for line in (tmp_path / "ground" / "predictions.jsonl").read_text().splitlines()]
    for row in rows:
        if row["decision"] == "point":
            assert row["segmenter"] == "external"
            assert row["rle"][1] == 1

    config.segmenter = "external"
    config.peer_command = None
    assert cmd_ground(config).exit_code == EXIT_CONFIG


def test_ground_with_dead_peer(tmp_path, forged_dir):
    command = " ".join(shlex.quote(part) for part in stub_peer_command("silent"))
    config = _ground_config(
        tmp_path / "ground",
        forged_dir / "manifest.jsonl",
        oracle_logits=True,
        segmenter="external",
        peer_command=command,
    )
    assert cmd_ground(config).exit_code == EXIT_GROUND


def test_ground_rejects_non_positive_peer_timeout(tmp_path, forged_dir):
    command = " ".join(shlex.quote(part) for part in stub_peer_command("ok"))
    config = _ground_config(
        tmp_path / "ground",
        forged_dir / "manifest.jsonl",
        oracle_logits=True,
        segmenter="external",
        peer_command=command,
        peer_timeout=0,
    )
    res = cmd_ground(config)
    assert res.exit_code == EXIT_CONFIG
    assert res.error.location.field == "peer_timeout"


def test_ground_keeps_going_past_corrupt_responses(tmp_path):
    forged = tmp_path / "forge"
    mix = {"global": 1, "local": 1, "grounding": 4, "ref_short": 1, "ref_long": 1}
    assert cmd_forge(forge_config(forged, sample_count=10, task_mix=mix, uniform_ratio=0.0)).ok

    manifest = forged / "manifest.jsonl"
    command = " ".join(shlex.quote(part) for part in stub_peer_command("corrupt-odd"))
    config = _ground_config(
        tmp_path / "ground",
        manifest,
        oracle_logits=True,
        segmenter="external",
        peer_command=command,
        peers=1,
        workers=1,
    )
    res = cmd_ground(config)
    assert res.error is None
    assert res.exit_code == EXIT_GROUND

    grounding = [(s, t) for s in read_manifest(manifest) for t in s.tasks if t.task == TASK_GROUNDING]
    rows = [json.loads(line) for line in (tmp_path / "ground" / "predictions.jsonl").read_text().splitlines()]
    assert [(r["sample_id"], r["task_id"]) for r in rows] == [(s.sample_id, t.task_id) for s, t in grounding]

    prompted = [row for row in rows if row["decision"] == "point"]
    failed = [i for i, row in enumerate(prompted) if "error" in row]
    assert failed == list(range(1, len(prompted), 2))
    assert res.value["failed"] == len(failed) > 0

    for i, row in enumerate(prompted):
        if i in failed:
            assert row["error"].startswith("Protocol Violation")
            assert row["rle"] == [row["width"] * row["height"]]
        else:
            assert row["rle"][1] == 1
    assert all("error" not in row for row in rows if row["decision"] == "skip")


def test_eval_requires_every_prediction(tmp_path, forged_dir):
    manifest = forged_dir / "manifest.jsonl"
    res = cmd_ground(_ground_config(tmp_path / "ground", manifest, oracle_logits=True))
    assert res.ok

    lines = (tmp_path / "ground" / "predictions.jsonl").read_text().splitlines()
    dropped = tmp_path / "partial.jsonl"
    dropped.write_text("\n".join(lines[1:]) + "\n")

    res = cmd_eval(_eval_config(tmp_path / "eval", manifest, dropped))
    assert res.exit_code == EXIT_EVAL
    assert isinstance(res.error, IdMismatch)
    assert json.loads(lines[0])["sample_id"] in res.error.details

    res = cmd_eval(_eval_config(tmp_path / "eval", manifest, tmp_path / "nowhere.jsonl"))
    assert res.exit_code == EXIT_CONFIG


def _ratings(path, scores_by_dimension):
    rows = []
    for dimension, grid in scores_by_dimension.items():
        for item, ratings in enumerate(grid):
            rows.append({"dimension": dimension, "item": item, "ratings": ratings})
    return _jsonl(path, rows)


def _validate_config(out, ratings):
    config = RunConfig()
    config.paths.out_dir = str(out)
    config.paths.ratings = ratings
    return config


def test_validate_exit_codes(tmp_path):
    good = [[5, 4, 5], [4, 4, 5], [5, 5, 5], [4, 5, 4], [5, 4, 4], [3, 4, 4]]
    dims = ("semantic", "spatial", "distortion", "linguistic")

    passing = _ratings(tmp_path / "pass.jsonl", {d: good for d in dims})
    res = cmd_validate(_validate_config(tmp_path / "a", passing))
    assert res.exit_code == EXIT_OK
    assert json.loads((tmp_path / "a" / "verification.json").read_text())["dimensions"]["semantic"]["pass"]

    weak = [[5, 5, 4], [4, 4, 3], [3, 3, 2], [4, 5, 4], [4, 4, 4]]
    failing = _ratings(tmp_path / "fail.jsonl", {d: (weak if d == "linguistic" else good) for d in dims})
    res = cmd_validate(_validate_config(tmp_path / "b", failing))
    assert res.exit_code == EXIT_VALIDATE_FAIL
    assert res.error is None
    assert res.value["linguistic"]["pass"] is False

    malformed = _ratings(tmp_path / "bad.jsonl", {"semantic": [[7, 1]]})
    assert cmd_validate(_validate_config(tmp_path / "c", malformed)).exit_code == EXIT_CONFIG


def test_cli_forge(tmp_path, capsys):
    out = tmp_path / "cli"
    with pytest.raises(SystemExit) as info:
        main(["forge", "--out", str(out), "--count", "3", "--width", "32", "--height", "40", "--seed", "5"])
    assert info.value.code == EXIT_OK
    assert "samples" in capsys.readouterr().out

    echo = json.loads((out / "run_config.json").read_text())
    assert echo["dims"] == [32, 40]
    assert echo["sample_count"] == 3


def test_cli_reports_config_errors(tmp_path, capsys):
    with pytest.raises(SystemExit) as info:
        main(["forge", "--out", str(tmp_path), "--count", "0"])
    assert info.value.code == EXIT_CONFIG
    err = capsys.readouterr().err
    assert "Config Error" in err and "sample_count" in err

    config = tmp_path / "run.json"
    config.write_text(json.dumps({"colour": "red"}))
    with pytest.raises(SystemExit) as info:
        main(["forge", "--config", str(config), "--out", str(tmp_path)])
    assert info.value.code == EXIT_CONFIG


def test_cli_environment_override(tmp_path, monkeypatch):
    monkeypatch.setenv("SPIDERFORGE_OUT_DIR", str(tmp_path / "env-out"))
    with pytest.raises(SystemExit) as info:
        main(["forge", "--count", "2", "--width", "32", "--height", "32"])
    assert info.value.code == EXIT_OK
    assert (tmp_path / "env-out" / "manifest.jsonl").exists()
