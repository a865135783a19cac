"""Segmentation adapter – oracle and flood-fill segmenters plus the external peer protocol."""

from .segmenter_kind import SegmenterKind
from .segmenters import segment_oracle, segment_flood_fill
from .protocol import encode_request, encode_response, decode_response
from .peer import ExternalPeer, DEFAULT_PEER_TIMEOUT
from .peer_pool import PeerPool, segment_external
from .segmenter import Segmenter, SegmentTarget, DEFAULT_COLOR_TOL

__all__ = [
    "SegmenterKind",
    "segment_oracle",
    "segment_flood_fill",
    "encode_request",
    "encode_response",
    "decode_response",
    "ExternalPeer",
    "DEFAULT_PEER_TIMEOUT",
    "PeerPool",
    "segment_external",
    "Segmenter",
    "SegmentTarget",
    "DEFAULT_COLOR_TOL",
]
