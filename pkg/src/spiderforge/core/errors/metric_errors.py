"""Metric errors – empty or degenerate evaluation inputs."""

from .error import Error


class EmptyResults(Error):
    error_name = "Empty Results"


class EmptyInput(Error):
    error_name = "Empty Input"


class DegenerateInput(Error):
    error_name = "Degenerate Input"


class DegenerateMatrix(Error):
    error_name = "Degenerate Matrix"
