"""Core constants package – exposes distortion tables, task names, question pools, labels, and exit codes."""

from .distortions import *
from .tasks import *
from .questions import *
from .labels import *
from .exit_codes import *
