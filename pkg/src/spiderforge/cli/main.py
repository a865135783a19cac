"""Spiderforge command-line interface.

Subcommands forge, ground, eval, and validate-ratings. Options given on the
command line override the environment, which overrides a --config file,
which overrides the built-in defaults. Results go to stdout, logs and
errors to stderr, and the exit code names the failure class.
"""

import argparse
import logging
import sys

from spiderforge.commands import (
    cmd_eval,
    cmd_forge,
    cmd_ground,
    cmd_validate,
    load_config,
)
from spiderforge.core.constants import EXIT_CONFIG
from spiderforge.core.errors import ConfigError
from spiderforge.forge import format_statistics
from spiderforge.metrics import format_report_table, format_verification
from spiderforge.segmentation import SegmenterKind
from spiderforge.version import __version__

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

# flag dest -> RunConfig field, for options that live under paths
PATH_FLAGS = {
    "out": "out_dir",
    "source_masks": "source_masks",
    "source_images": "source_images",
    "manifest": "manifest",
    "logits": "logits",
    "predictions": "predictions",
    "answers": "answers",
    "scores": "scores",
    "ratings": "ratings",
}
SKIP_FLAGS = {"command", "config", "verbose", "handler"}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug")
    common.add_argument("--progress", action="store_true", default=None, help="show progress bars")
    common.add_argument("--config", metavar="PATH", help="JSON config file")
    common.add_argument("--out", metavar="DIR", help="output directory")

    parser = argparse.ArgumentParser(
        prog="spiderforge",
        description="Region-level IQA dataset forge and text-to-point grounding evaluation.",
    )
    parser.add_argument("--version", action="version", version=f"spiderforge {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    forge = sub.add_parser("forge", parents=[common], help="forge a seeded dataset")
    forge.add_argument("--seed", type=int)
    forge.add_argument("--count", dest="sample_count", type=int)
    forge.add_argument("--width", type=int)
    forge.add_argument("--height", type=int)
    forge.add_argument("--workers", type=int)
    forge.add_argument("--source-images", metavar="DIR")
    forge.add_argument("--source-masks", metavar="DIR")
    forge.add_argument("--mask-format", choices=["rle", "png"])
    forge.add_argument("--uniform-ratio", type=float)
    forge.add_argument("--tasks-per-sample", type=int)
    forge.set_defaults(handler=run_forge)

    ground = sub.add_parser("ground", parents=[common], help="turn logits into predicted masks")
    ground.add_argument("--manifest", metavar="PATH")
    ground.add_argument("--logits", metavar="PATH")
    ground.add_argument("--oracle-logits", action="store_true", default=None)
    ground.add_argument("--segmenter", choices=[k.value for k in SegmenterKind])
    ground.add_argument("--peer-command", metavar="CMD")
    ground.add_argument("--peers", type=int)
    ground.add_argument("--peer-timeout", type=float, metavar="SECONDS")
    ground.add_argument("--color-tol", type=int)
    ground.add_argument("--tau", type=float)
    ground.add_argument("--as-printed-softmax", action="store_true", default=None)
    ground.add_argument("--workers", type=int)
    ground.set_defaults(handler=run_ground)

    evaluate = sub.add_parser("eval", parents=[common], help="score predictions against a manifest")
    evaluate.add_argument("--manifest", metavar="PATH")
    evaluate.add_argument("--predictions", metavar="PATH")
    evaluate.add_argument("--answers", metavar="PATH")
    evaluate.add_argument("--scores", metavar="PATH")
    evaluate.set_defaults(handler=run_eval)

    validate = sub.add_parser("validate-ratings", parents=[common], help="dataset verification verdict")
    validate.add_argument("--ratings", metavar="PATH")
    validate.set_defaults(handler=run_validate)

    return parser


def flags_from_args(args):
    """Only options actually given; everything else falls through to lower layers."""
    flags = {}
    paths = {}
    width = height = None

    for dest, value in vars(args).items():
        if dest in SKIP_FLAGS or value is None:
            continue
        if dest in PATH_FLAGS:
            paths[PATH_FLAGS[dest]] = value
        elif dest == "width":
            width = value
        elif dest == "height":
            height = value
        else:
            flags[dest] = value

    if paths:
        flags["paths"] = paths
    if width is not None or height is not None:
        flags["_dims"] = (width, height)
    return flags


def configure_logging(verbose):
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)


def resolve_config(args):
    flags = flags_from_args(args)
    dims = flags.pop("_dims", None)

    config = load_config(flags, config_file=args.config)
    if dims is not None:
        width, height = dims
        config.dims = (
            width if width is not None else config.dims[0],
            height if height is not None else config.dims[1],
        )

    if "progress" not in flags and not config.progress:
        config.progress = sys.stderr.isatty()
    return config


def run_forge(res):
    sys.stdout.write(format_statistics(res.value))


def run_ground(res):
    v = res.value
    sys.stdout.write(
        f"{v['predictions']} predictions ({v['skipped']} skipped, {v['failed']} failed) -> {v['path']}\n"
    )


def run_eval(res):
    sys.stdout.write(format_report_table(res.value))


def run_validate(res):
    sys.stdout.write(format_verification(res.value))


COMMANDS = {
    "forge": cmd_forge,
    "ground": cmd_ground,
    "eval": cmd_eval,
    "validate-ratings": cmd_validate,
}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        config = resolve_config(args)
    except ConfigError as e:
        sys.stderr.write(e.as_string() + "\n")
        sys.exit(EXIT_CONFIG)

    res = COMMANDS[args.command](config)

    if res.error:
        sys.stderr.write(res.error.as_string() + "\n")
    elif res.value is not None:
        args.handler(res)

    sys.exit(res.exit_code)
