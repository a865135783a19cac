"""eval – grounding mIoU, referring accuracy, and optional SRCC/PLCC against a manifest."""

import logging
from pathlib import Path

from spiderforge.core.constants import (
    EXIT_CONFIG,
    EXIT_EVAL,
    REFERRING_SUB_TASKS,
    TASK_GROUNDING,
    TASK_REFERRING,
)
from spiderforge.core.errors import ConfigError, Error, IdMismatch, Location
from spiderforge.core.util import write_json
from spiderforge.forge import read_manifest
from spiderforge.metrics import (
    GroundingResult,
    build_report,
    extract_distortion_types,
    miou_report,
    plcc,
    referring_accuracy,
    referring_f1,
    render_report,
    srcc,
)
from spiderforge.commands.command_result import CommandResult
from spiderforge.commands.config import ensure_out_dir, validate_config
from spiderforge.commands.intake import read_answers, read_predictions, read_scores

logger = logging.getLogger(__name__)

REPORT_NAME = "report.json"


def _match_ids(expected, got, what, path):
    missing = [k for k in expected if k not in got]
    if missing:
        sid, tid = missing[0]
        raise IdMismatch(
            f"{what} missing for {sid}/{tid} ({len(missing)} missing in total)", Location(str(path))
        )

    extra = sorted(k for k in got if k not in expected)
    if extra:
        sid, tid = extra[0]
        raise IdMismatch(f"{what} for {sid}/{tid} has no task in the manifest", Location(str(path)))


def evaluate_grounding(samples, predictions, path):
    tasks = {
        (s.sample_id, t.task_id): (s, t)
        for s in samples
        for t in s.tasks
        if t.task == TASK_GROUNDING
    }
    _match_ids(tasks, predictions, "prediction", path)

    results = [
        GroundingResult(
            sid,
            tid,
            task.sub_task,
            predictions[(sid, tid)],
            sample.region_by_id(task.target_region_id).mask,
        )
        for (sid, tid), (sample, task) in tasks.items()
    ]
    return miou_report(results) if results else None


def evaluate_referring(samples, answers, path):
    tasks = {
        (s.sample_id, t.task_id): t
        for s in samples
        for t in s.tasks
        if t.task == TASK_REFERRING
    }
    _match_ids(tasks, answers, "answer", path)
    if not tasks:
        return None

    preds, gts, subs = [], [], []
    for key, task in tasks.items():
        preds.append(extract_distortion_types(answers[key]))
        gts.append(frozenset(task.answer.distortion_set))
        subs.append(task.sub_task)

    per_sub, counts = {}, {}
    for sub in REFERRING_SUB_TASKS:
        idx = [i for i, s in enumerate(subs) if s == sub]
        if idx:
            per_sub[sub] = referring_accuracy([preds[i] for i in idx], [gts[i] for i in idx])
            counts[sub] = len(idx)

    return {
        "accuracy": referring_accuracy(preds, gts),
        "per_sub_task": per_sub,
        "counts": counts,
        "f1": referring_f1(preds, gts),
    }


def evaluate_scores(path):
    predicted, reference = read_scores(path)
    return {"srcc": srcc(predicted, reference), "plcc": plcc(predicted, reference), "n": len(predicted)}


def cmd_eval(config):
    res = CommandResult()

    try:
        validate_config(config, "eval")
        out = ensure_out_dir(config)
    except ConfigError as e:
        return res.failure(e, EXIT_CONFIG)

    paths = config.paths
    try:
        samples = read_manifest(paths.manifest)
        grounding = evaluate_grounding(
            samples, read_predictions(paths.predictions), Path(paths.predictions)
        )

        referring = None
        if paths.answers:
            referring = evaluate_referring(samples, read_answers(paths.answers), Path(paths.answers))

        scoring = evaluate_scores(paths.scores) if paths.scores else None
    except Error as e:
        return res.failure(e, EXIT_EVAL)

    report = build_report(config.to_json("eval"), grounding, referring, scoring)
    render_report(report, out / REPORT_NAME)
    write_json(out / "run_config.json", config.to_json("eval"))

    logger.info("wrote %s", out / REPORT_NAME)
    return res.success(report)
