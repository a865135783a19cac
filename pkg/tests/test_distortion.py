import itertools
import math

import numpy as np
import pytest

from spiderforge.core.errors import DimMismatch, IllegalOrder, InvalidLevel
from spiderforge.distortion import (
    DistortionEngine,
    DistortionPlan,
    DistortionSpec,
    DistortionType,
    apply_operator,
    apply_plan,
    block_dct_quantize,
    cumulative_intensity,
    gaussian_stream,
    legal_orders,
    pixelate,
    render_sample,
    type_intensity,
    validate_order,
    weaken_contrast,
    weaken_saturation,
)
from spiderforge.forge import Region
from spiderforge.imaging import ImageBuffer, RegionMask

B = DistortionType.BLUR
N = DistortionType.NOISE
C = DistortionType.COMPRESSION
P = DistortionType.PIXELATE
CW = DistortionType.CONTRAST_WEAKEN
SW = DistortionType.SATURATE_WEAKEN

M64 = (1 << 64) - 1


def scalar_gaussians(seed, count):
    out = []
    for k in range(count):
        draws = []
        for i in (2 * k, 2 * k + 1):
            z = (seed + (i + 1) * 0x9E3779B97F4A7C15) & M64
            z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & M64
            z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & M64
            draws.append(z ^ (z >> 31))
        u1 = ((draws[0] >> 11) + 1) * 2.0**-53
        u2 = (draws[1] >> 11) * 2.0**-53
        out.append(math.sqrt(-2.0 * math.log(u1)) * math.cos(2.0 * math.pi * u2))
    return out


def test_gaussian_stream_matches_scalar_oracle():
    assert np.allclose(gaussian_stream(42, 64), scalar_gaussians(42, 64), rtol=0, atol=1e-12)


def test_noise_level_three_matches_scalar_oracle(rng):
    card = ImageBuffer(rng.integers(0, 256, size=(16, 16, 3), dtype=np.uint8))
    out = apply_operator(card, DistortionSpec(N, 3, 42))

    z = scalar_gaussians(42, 16 * 16 * 3)
    flat = card.pixels.reshape(-1).tolist()
    expected = [min(255, max(0, round(v + 16.0 * d))) for v, d in zip(flat, z)]

    assert out.pixels.reshape(-1).tolist() == expected


def test_blur_keeps_constant_image():
    flat = ImageBuffer.filled(12, 9, (90, 140, 200))
    for level in range(1, 6):
        assert apply_operator(flat, DistortionSpec(B, level)) == flat


def test_compression_keeps_mid_grey_and_dims():
    grey = ImageBuffer.filled(13, 10, (128, 128, 128))
    for level in range(1, 6):
        out = apply_operator(grey, DistortionSpec(C, level))
        assert out == grey


def test_compression_changes_texture(card):
    out = block_dct_quantize(card, 16)
    assert out.dims == card.dims
    assert out != card


def test_degenerate_factors_are_identities(card):
    assert pixelate(card, 1) == card
    assert weaken_contrast(card, 1.0) == card
    assert weaken_saturation(card, 1.0) == card


def test_pixelate_makes_uniform_blocks(card):
    out = pixelate(card, 4).pixels
    assert (out[0:4, 0:4] == out[0, 0]).all()
    assert (out[4:8, 8:12] == out[4, 8]).all()


def test_saturation_zero_gives_grey(card):
    out = weaken_saturation(card, 0.0).pixels.astype(int)
    assert (np.ptp(out, axis=2) <= 1).all()


def test_every_operator_dispatches(card):
    engine = DistortionEngine()
    for kind in DistortionType:
        out = engine.apply_operator(card, DistortionSpec(kind, 2, 7))
        assert out.dims == card.dims
    assert len(engine.dispatch_cache) == 6


def test_invalid_level():
    with pytest.raises(InvalidLevel):
        DistortionSpec(B, 0)
    with pytest.raises(InvalidLevel):
        DistortionSpec(B, 6)


def test_order_table_is_exhaustive():
    legal = {pair for pair in itertools.product(DistortionType, repeat=2) if validate_order(*pair)}
    assert len(legal) == 12
    assert legal == set(legal_orders())
    assert validate_order(B, N)
    assert not validate_order(N, B)
    assert validate_order(CW, CW)
    assert not any(validate_order(N, second) for second in DistortionType)


def test_illegal_plan_is_rejected(card):
    with pytest.raises(IllegalOrder):
        apply_plan(card, DistortionPlan((DistortionSpec(N, 1), DistortionSpec(B, 1))))
    with pytest.raises(IllegalOrder):
        DistortionPlan((DistortionSpec(CW, 1),) * 3).validate()


def test_empty_plan_is_identity(card):
    assert apply_plan(card, DistortionPlan()) == card


def test_order_matters(card):
    full = RegionMask.full(*card.dims)
    blur_then_noise = DistortionPlan((DistortionSpec(B, 3), DistortionSpec(N, 3, 5)))
    compression_then_blur = DistortionPlan((DistortionSpec(C, 4), DistortionSpec(B, 3)))
    blur_then_compression = DistortionPlan((DistortionSpec(B, 3), DistortionSpec(C, 4)))

    a = apply_plan(card, compression_then_blur, full)
    b = apply_plan(card, blur_then_compression, full)
    assert a != b
    assert apply_plan(card, blur_then_noise, full) == apply_plan(card, blur_then_noise, full)


def test_outside_region_is_untouched(card):
    half = np.zeros((card.height, card.width), dtype=bool)
    half[:, : card.width // 2] = True
    plan = DistortionPlan((DistortionSpec(CW, 5), DistortionSpec(N, 5, 11)))

    out = apply_plan(card, plan, RegionMask(half))
    assert np.array_equal(out.pixels[~half], card.pixels[~half])
    assert not np.array_equal(out.pixels[half], card.pixels[half])


def test_region_dims_must_match(card):
    with pytest.raises(DimMismatch):
        apply_plan(card, DistortionPlan((DistortionSpec(B, 1),)), RegionMask.full(3, 3))


def test_render_sample_is_deterministic(card):
    left = np.zeros((card.height, card.width), dtype=bool)
    left[:, :10] = True
    right = np.zeros_like(left)
    right[:, 20:] = True
    regions = [
        Region(2, RegionMask(right), "tree", DistortionPlan((DistortionSpec(P, 2),))),
        Region(1, RegionMask(left), "sky", DistortionPlan((DistortionSpec(SW, 4), DistortionSpec(N, 2, 3)))),
    ]
    out = render_sample(card, regions)
    assert out == render_sample(card, list(reversed(regions)))
    assert np.array_equal(out.pixels[:, 10:20], card.pixels[:, 10:20])


def test_intensities():
    assert cumulative_intensity(DistortionPlan()) == 0
    assert cumulative_intensity(DistortionPlan((DistortionSpec(B, 3),))) == 3
    plan = DistortionPlan((DistortionSpec(CW, 2), DistortionSpec(N, 4)))
    assert cumulative_intensity(plan) == 6
    assert type_intensity(plan, N) == 4
    assert type_intensity(plan, B) == 0
    assert type_intensity(DistortionPlan((DistortionSpec(CW, 2), DistortionSpec(CW, 3))), CW) == 5


def test_type_names_round_trip():
    assert DistortionType.from_name("Contrast Weaken") is CW
    assert CW.phrase == "contrast weaken"
    with pytest.raises(ValueError):
        DistortionType.from_name("Haze")
    spec = DistortionSpec(SW, 2, 99)
    assert DistortionSpec.from_json(spec.to_json()) == spec
