import numpy as np
import pytest

from spiderforge.core.errors import DimMismatch, NoRegions, PeerUnreachable, ProtocolViolation
from spiderforge.grounding import PointPrompt
from spiderforge.imaging import ImageBuffer
from spiderforge.segmentation import (
    ExternalPeer,
    PeerPool,
    Segmenter,
    SegmenterKind,
    SegmentTarget,
    decode_response,
    encode_request,
    encode_response,
    segment_flood_fill,
    segment_oracle,
)

from conftest import rect_mask, stub_peer_command


def test_segmenter_kind_names():
    assert SegmenterKind.from_name("flood-fill") is SegmenterKind.FLOOD_FILL
    assert SegmenterKind.FLOOD_FILL.slug == "flood_fill"
    assert SegmenterKind.ORACLE.oracle_assisted
    assert not SegmenterKind.EXTERNAL.oracle_assisted
    with pytest.raises(ValueError):
        SegmenterKind.from_name("sam")


def test_oracle_returns_containing_mask(two_masks):
    left, right = two_masks
    assert segment_oracle(PointPrompt(2.4, 5.0), two_masks) is left
    assert segment_oracle(PointPrompt(14.5, 4.5), two_masks) is right


def test_oracle_falls_back_to_nearest_center(two_masks):
    left, right = two_masks
    # the gap between the blocks; centers sit at (2, 4.5) and (14.5, 4.5)
    assert segment_oracle(PointPrompt(6.0, 5.0), two_masks) is left
    assert segment_oracle(PointPrompt(10.0, 5.0), two_masks) is right


def test_oracle_without_regions():
    with pytest.raises(NoRegions):
        segment_oracle(PointPrompt(1, 1), [])


def _two_tone(width=10, height=6, split=4):
    pixels = np.zeros((height, width, 3), dtype=np.uint8)
    pixels[:, :split] = (200, 40, 40)
    pixels[:, split:] = (20, 20, 220)
    return ImageBuffer(pixels)


def test_flood_fill_grows_similar_colors():
    img = _two_tone()
    mask = segment_flood_fill(PointPrompt(1.0, 1.0), img, 12)
    assert mask == rect_mask(10, 6, 0, 0, 3, 5)

    mask = segment_flood_fill(PointPrompt(8.0, 3.0), img, 12)
    assert mask == rect_mask(10, 6, 4, 0, 9, 5)


def test_flood_fill_respects_tolerance_and_connectivity():
    pixels = np.full((5, 5, 3), 100, dtype=np.uint8)
    pixels[2, :] = 160
    pixels[0, 0] = 108
    img = ImageBuffer(pixels)

    strict = segment_flood_fill(PointPrompt(1, 1), img, 0)
    assert not strict.contains(0, 0)
    assert strict.area == 9

    loose = segment_flood_fill(PointPrompt(1, 1), img, 12)
    assert loose.contains(0, 0)
    assert not loose.contains(0, 3)

    everything = segment_flood_fill(PointPrompt(1, 1), img, 60)
    assert everything.is_full


def test_flood_fill_rejects_negative_tolerance():
    with pytest.raises(ValueError):
        segment_flood_fill(PointPrompt(1, 1), _two_tone(), -1)


def test_request_encoding_is_exact():
    line = encode_request("s1", "/data/img.png", PointPrompt(146.2118, 40.0), (300, 100))
    assert line == '{"id":"s1","image":"/data/img.png","point":[146.0,40.0],"width":300,"height":100}'


def test_response_decoding():
    mask = decode_response('{"id":"s1","rle":[0,4],"width":2,"height":2}', "s1", (2, 2))
    assert mask.is_full

    mask = rect_mask(6, 4, 1, 1, 2, 2)
    assert decode_response(encode_response("r9", mask), "r9", (6, 4)) == mask


@pytest.mark.parametrize(
    "line",
    [
        "not json",
        "[0, 4]",
        '{"id":"other","rle":[0,4],"width":2,"height":2}',
        '{"id":"s1","rle":[0,3],"width":2,"height":2}',
        '{"id":"s1","rle":[0,-1,5],"width":2,"height":2}',
        '{"id":"s1","rle":[0,4],"width":"2","height":2}',
    ],
)
def test_response_violations(line):
    with pytest.raises(ProtocolViolation) as info:
        decode_response(line, "s1", (2, 2))
    assert info.value.payload == line


def test_response_dim_mismatch():
    with pytest.raises(DimMismatch):
        decode_response('{"id":"s1","rle":[0,6],"width":3,"height":2}', "s1", (2, 2))


def test_external_peer_round_trip():
    with ExternalPeer(stub_peer_command("ok")) as peer:
        mask = peer.segment(PointPrompt(3.4, 2.0), "img.png", (8, 6), "s000001:t00")
        assert mask.area == 1
        assert mask.contains(3, 2)


def test_corrupted_responses_are_reported_not_repaired():
    outcomes = []
    with ExternalPeer(stub_peer_command("corrupt-odd")) as peer:
        for n in range(10):
            try:
                mask = peer.segment(PointPrompt(n % 8, 1), "img.png", (8, 6), f"r{n}")
                outcomes.append(mask.area)
            except ProtocolViolation as e:
                outcomes.append(e)

    errors = [n for n, o in enumerate(outcomes) if isinstance(o, ProtocolViolation)]
    assert errors == [1, 3, 5, 7, 9]
    assert [o for o in outcomes if not isinstance(o, ProtocolViolation)] == [1] * 5


@pytest.mark.parametrize(
    "mode, error",
    [("bad-id", ProtocolViolation), ("not-json", ProtocolViolation), ("bad-dims", DimMismatch)],
)
def test_peer_modes(mode, error):
    with ExternalPeer(stub_peer_command(mode)) as peer:
        with pytest.raises(error):
            peer.segment(PointPrompt(1, 1), "img.png", (4, 4), "r0")


def test_silent_peer_is_unreachable():
    with ExternalPeer(stub_peer_command("silent")) as peer:
        with pytest.raises(PeerUnreachable):
            peer.segment(PointPrompt(1, 1), "img.png", (4, 4), "r0")


def test_missing_peer_command():
    with pytest.raises(PeerUnreachable):
        ExternalPeer(["/nonexistent/segmenter-binary"])


def test_hung_peer_times_out():
    with ExternalPeer(stub_peer_command("hang"), timeout=0.5) as peer:
        with pytest.raises(PeerUnreachable, match="did not answer"):
            peer.segment(PointPrompt(1, 1), "img.png", (4, 4), "r0")
        # the stream is out of step after a missed answer, so the peer is not reused
        with pytest.raises(PeerUnreachable):
            peer.segment(PointPrompt(1, 1), "img.png", (4, 4), "r1")


def test_peer_pool_serves_threads():
    from concurrent.futures import ThreadPoolExecutor

    with PeerPool(stub_peer_command("ok"), size=3) as pool:
        assert pool.size == 3

        def one(n):
            return pool.segment(PointPrompt(n % 8, n % 6), "img.png", (8, 6), f"r{n}")

        with ThreadPoolExecutor(max_workers=4) as executor:
            masks = list(executor.map(one, range(24)))

    for n, mask in enumerate(masks):
        assert mask.area == 1
        assert mask.contains(n % 8, n % 6)


def test_segmenter_dispatch(two_masks):
    target = SegmentTarget("s0:t0", (20, 10), regions=two_masks, image=_two_tone(20, 10, 8))

    oracle = Segmenter("oracle")
    assert oracle.segment(PointPrompt(15, 4), target) is two_masks[1]

    flood = Segmenter(SegmenterKind.FLOOD_FILL, color_tol=5)
    assert flood.segment(PointPrompt(2, 2), target) == rect_mask(20, 10, 0, 0, 7, 9)
    assert set(flood.dispatch_cache) == {SegmenterKind.FLOOD_FILL}

    with PeerPool(stub_peer_command("ok")) as pool:
        external = Segmenter("external", endpoint=pool)
        assert external.segment(PointPrompt(5, 5), target).contains(5, 5)

    with pytest.raises(ValueError):
        Segmenter("external")


def test_segment_target_loads_lazily():
    calls = []

    def loader(ref):
        calls.append(ref)
        return _two_tone()

    target = SegmentTarget("s0:t0", (10, 6), image_ref="images/s0.png", loader=loader)
    target.load_image()
    target.load_image()
    assert calls == ["images/s0.png"]

    with pytest.raises(ValueError):
        SegmentTarget("s0:t1", (10, 6)).load_image()
