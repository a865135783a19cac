import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from spiderforge.commands import RunConfig, cmd_forge
from spiderforge.imaging import ImageBuffer, RegionMask

FIXTURES = Path(__file__).resolve().parent / "fixtures"
STUB_PEER = FIXTURES / "stub_peer.py"


@pytest.fixture
def rng():
    return np.random.default_rng(1234)


@pytest.fixture
def card(rng):
    return ImageBuffer(rng.integers(0, 256, size=(24, 32, 3), dtype=np.uint8))


def rect_mask(width, height, x0, y0, x1, y1):
    """Inclusive corners."""
    bits = np.zeros((height, width), dtype=bool)
    bits[y0 : y1 + 1, x0 : x1 + 1] = True
    return RegionMask(bits)


@pytest.fixture
def two_masks():
    # 20x10 frame: a left block and a right block with a gap between them
    return [rect_mask(20, 10, 0, 0, 4, 9), rect_mask(20, 10, 12, 2, 17, 7)]


def stub_peer_command(*args):
    return [sys.executable, str(STUB_PEER), *args]


def forge_config(out_dir, **overrides):
    config = RunConfig(seed=7, sample_count=12, dims=(64, 64))
    config.paths.out_dir = str(out_dir)
    for key, value in overrides.items():
        setattr(config, key, value)
    return config


@pytest.fixture(scope="session")
def forged_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("forged")
    res = cmd_forge(forge_config(out, sample_count=20))
    assert res.error is None, res.error
    return out
