"""Spiderforge public API – the four commands, their config, and the version."""

from .version import __version__
from .commands import RunConfig, load_config, cmd_forge, cmd_ground, cmd_eval, cmd_validate

__all__ = [
    "RunConfig",
    "load_config",
    "cmd_forge",
    "cmd_ground",
    "cmd_eval",
    "cmd_validate",
    "__version__",
]
