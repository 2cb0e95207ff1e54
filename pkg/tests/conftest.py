import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from lfconsist import Layer, SyntheticScene, background_layer, generate_synthetic


def two_layer(radius=2, size=64, seed=7, front_d=2, back_d=0, **depth):
    """Standard test scene: noise background plus a front noise rectangle."""
    w = h = size
    scene = SyntheticScene(layers=[
        background_layer(back_d, w, h, radius, radius),
        Layer(w // 4, h // 4, w // 3, h // 3, front_d),
    ], seed=seed)
    return generate_synthetic(scene, radius, radius, w, h, **depth)


def single_layer(radius=2, size=64, seed=3, d=0, **depth):
    w = h = size
    scene = SyntheticScene(layers=[background_layer(d, w, h, radius, radius)],
                           seed=seed)
    return generate_synthetic(scene, radius, radius, w, h, **depth)


@pytest.fixture(scope="session")
def two_layer_small():
    """5x5 grid, 64x64, front d=2 over background d=0."""
    return two_layer()


@pytest.fixture(scope="session")
def two_layer_9x9():
    """9x9 grid, 96x96; the acceptance-scale field."""
    w = h = 96
    scene = SyntheticScene(layers=[
        background_layer(0, w, h, 4, 4),
        Layer(24, 24, 32, 32, 2),
    ], seed=7)
    return generate_synthetic(scene, 4, 4, w, h, depth_alpha=3.0, depth_beta=-1.0)
