"""Metrics package – mIoU, referring accuracy, SRCC/PLCC, ICC, and dataset verification."""

from .grounding import GroundingResult, miou_report, WEIGHTING_SAMPLE
from .referring import extract_distortion_types, referring_accuracy, referring_f1
from .correlation import srcc, plcc
from .icc import icc
from .verification import (
    RatingsMatrix,
    verification_summary,
    summarize_matrix,
    read_ratings,
    format_verification,
    PASS_PROPORTION,
)
from .report import build_report, render_report, format_report_table

__all__ = [
    "GroundingResult",
    "miou_report",
    "WEIGHTING_SAMPLE",
    "extract_distortion_types",
    "referring_accuracy",
    "referring_f1",
    "srcc",
    "plcc",
    "icc",
    "RatingsMatrix",
    "verification_summary",
    "summarize_matrix",
    "read_ratings",
    "format_verification",
    "PASS_PROPORTION",
    "build_report",
    "render_report",
    "format_report_table",
]
