"""Peer wire protocol – one JSON request line out, one JSON response line back, matched by id.

Request:  {"id":"s1","image":"<path>","point":[146.0,40.0],"width":W,"height":H}
Response: {"id":"s1","rle":[...],"width":W,"height":H}

The point is sent as the rounded pixel, written as reals. Responses carry
row-major, zeros-first run lengths that must cover the frame exactly.
"""

import json

from spiderforge.core.errors import DimMismatch, ProtocolViolation
from spiderforge.grounding import round_point
from spiderforge.imaging import rle_decode

_COMPACT = (",", ":")


def encode_request(request_id, image_ref, point, dims):
    x, y = round_point(point, dims)
    width, height = dims
    payload = {
        "id": request_id,
        "image": str(image_ref),
        "point": [float(x), float(y)],
        "width": width,
        "height": height,
    }
    return json.dumps(payload, separators=_COMPACT)


def encode_response(request_id, mask):
    payload = {
        "id": request_id,
        "rle": mask.rle.to_list(),
        "width": mask.width,
        "height": mask.height,
    }
    return json.dumps(payload, separators=_COMPACT)


def _is_int(value):
    return isinstance(value, int) and not isinstance(value, bool)


def decode_response(line, request_id, dims):
    """Parses one response line into a RegionMask of the requested dims."""
    text = line.strip()

    try:
        obj = json.loads(text)
    except json.JSONDecodeError:
        raise ProtocolViolation("response is not JSON", payload=text)

    if not isinstance(obj, dict):
        raise ProtocolViolation("response must be a JSON object", payload=text)

    if obj.get("id") != request_id:
        raise ProtocolViolation(
            f"response id {obj.get('id')!r} does not match request {request_id!r}", payload=text
        )

    width, height = obj.get("width"), obj.get("height")
    if not (_is_int(width) and _is_int(height)):
        raise ProtocolViolation("width and height must be integers", payload=text)
    if (width, height) != tuple(dims):
        raise DimMismatch(tuple(dims), (width, height))

    counts = obj.get("rle")
    if not isinstance(counts, list) or not all(_is_int(c) and c >= 0 for c in counts):
        raise ProtocolViolation("rle must be a list of non-negative integers", payload=text)
    if sum(counts) != width * height:
        raise ProtocolViolation(
            f"run lengths sum to {sum(counts)}, expected {width * height}", payload=text
        )

    return rle_decode(counts, width, height)
