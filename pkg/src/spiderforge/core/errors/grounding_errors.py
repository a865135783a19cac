"""Text-to-point errors – raised while mapping positional terms to points and back."""

from .error import Error


class OutOfFrame(Error):
    error_name = "Out Of Frame"


class NonPositiveTau(Error):
    error_name = "Non-Positive Temperature"


class UnnormalizedProbs(Error):
    error_name = "Unnormalized Probabilities"


class MissingLogits(Error):
    error_name = "Missing Logits"


class BoundaryPoint(Error):
    error_name = "Boundary Point"
