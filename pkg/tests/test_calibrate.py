import numpy as np
import pytest

from lfconsist import InvalidDepthError, ViewIndex, calibrate, invert_depth
from lfconsist.calibrate import _warp_objective
from conftest import single_layer, two_layer


def test_invert_constant_depth():
    assert np.allclose(invert_depth(np.full((4, 4), 2.0, dtype=np.float32)), 0.5)


def test_invert_rejects_zero_depth():
    bad = np.ones((4, 4), dtype=np.float32)
    bad[1, 3] = 0.0
    with pytest.raises(InvalidDepthError):
        invert_depth(bad)


def test_invert_analytic_layers():
    # depth embedded as alpha / (d - beta) inverts to (d - beta) / alpha
    lf, gt = two_layer(depth_alpha=3.0, depth_beta=-1.0)
    d00 = gt[ViewIndex(0, 0)].values
    assert np.allclose(invert_depth(lf.central_depth), (d00 + 1.0) / 3.0, atol=1e-6)


def test_recovers_embedded_scale_and_bias():
    lf, _ = two_layer(radius=2, size=64, seed=7, depth_alpha=3.0, depth_beta=-1.0)
    params, disp = calibrate(lf)
    assert abs(params.alpha - 3.0) / 3.0 < 0.02
    assert abs(params.beta - (-1.0)) < 0.1
    assert not params.degenerate
    assert np.isfinite(disp.values).all()


def test_recovers_mixed_sign_disparities():
    # front d=+2 over background d=-1: the bias must go negative
    lf, _ = two_layer(radius=2, size=64, seed=3, front_d=2, back_d=-1,
                      depth_alpha=3.0, depth_beta=-2.0)
    params, disp = calibrate(lf)
    assert abs(params.alpha - 3.0) / 3.0 < 0.02
    assert abs(params.beta - (-2.0)) < 0.1
    assert disp.values.min() < 0 < disp.values.max()


def test_zero_baseline_flagged_degenerate():
    lf, _ = single_layer(radius=2, size=48, d=0, depth_alpha=3.0, depth_beta=-1.0)
    params, _ = calibrate(lf)
    assert params.degenerate
    assert params.residual < 1e-6


def test_residual_reproducible_from_returned_params():
    lf, _ = two_layer(radius=1, size=48, seed=5, depth_alpha=3.0, depth_beta=-1.0)
    params, disp = calibrate(lf)
    objective = _warp_objective(lf.central, lf.views[ViewIndex(1, 0)])
    assert abs(objective(disp.values) - params.residual) < 1e-6


def test_objective_increases_away_from_optimum():
    lf, _ = two_layer(radius=1, size=48, seed=5, depth_alpha=3.0, depth_beta=-1.0)
    params, _ = calibrate(lf)
    invd = invert_depth(lf.central_depth)
    objective = _warp_objective(lf.central, lf.views[ViewIndex(1, 0)])
    at = lambda a: objective(a * invd + params.beta)
    assert at(params.alpha * 1.1) > params.residual
    assert at(params.alpha * 0.9) > params.residual


def test_requires_depth_and_right_neighbor():
    lf, _ = two_layer(radius=1, size=32)
    with pytest.raises(ValueError):
        calibrate(lf)  # no depth embedded
