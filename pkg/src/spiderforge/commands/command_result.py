"""CommandResult – carries a command's value or its error, plus the exit code to leave with."""

from spiderforge.core.constants import EXIT_OK


class CommandResult:
    __slots__ = ("value", "error", "exit_code")

    def __init__(self):
        self.value = None
        self.error = None
        self.exit_code = EXIT_OK

    def success(self, value, exit_code=EXIT_OK):
        self.value = value
        self.exit_code = exit_code
        return self

    def failure(self, error, exit_code):
        self.error = error
        self.exit_code = exit_code
        return self

    @property
    def ok(self):
        return self.error is None and self.exit_code == EXIT_OK
