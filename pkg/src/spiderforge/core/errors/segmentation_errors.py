"""Segmentation errors – segmenter inputs and the external peer wire protocol."""

from .error import Error


class NoRegions(Error):
    error_name = "No Regions"


class PeerUnreachable(Error):
    error_name = "Peer Unreachable"


class ProtocolViolation(Error):
    error_name = "Protocol Violation"

    def __init__(self, details, payload=None, location=None):
        if payload is not None:
            details = f"{details} (payload: {payload!r})"
        super().__init__(details, location)
        self.payload = payload
