"""Evaluation report – the JSON document eval writes and the table it prints."""

from spiderforge.core.util import write_json


def build_report(config, grounding=None, referring=None, scoring=None):
    return {
        "config": dict(config),
        "weighting": grounding["weighting"] if grounding else None,
        "grounding": grounding,
        "referring": referring,
        "scoring": scoring,
    }


def render_report(report, path):
    write_json(path, report)


def _fmt(value):
    return "-" if value is None else f"{value:.4f}"


def format_report_table(report):
    rows = []

    grounding = report.get("grounding")
    if grounding:
        for sub, value in grounding["per_sub_task"].items():
            rows.append((f"mIoU {sub}", _fmt(value), grounding["counts"][sub]))
        rows.append(("mIoU Average", _fmt(grounding["average"]), sum(grounding["counts"].values())))

    referring = report.get("referring")
    if referring:
        for sub, value in referring["per_sub_task"].items():
            rows.append((f"Accuracy {sub}", _fmt(value), referring["counts"][sub]))
        rows.append(("Accuracy", _fmt(referring["accuracy"]), sum(referring["counts"].values())))
        rows.append(("Type F1 (macro)", _fmt(referring["f1"]["macro"]), ""))

    scoring = report.get("scoring")
    if scoring:
        rows.append(("SRCC", _fmt(scoring["srcc"]), scoring["n"]))
        rows.append(("PLCC", _fmt(scoring["plcc"]), scoring["n"]))

    if not rows:
        return "nothing to report\n"

    width = max(len(name) for name, _, _ in rows)
    return "\n".join(f"{name:<{width}}  {value:>8}  {n:>6}" for name, value, n in rows) + "\n"
