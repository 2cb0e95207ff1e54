import numpy as np
import pytest

from lfconsist import (DimensionMismatchError, DisparityField, IncompleteGridError,
                       InvalidDepthError, LightField, ViewIndex, grid_indices)
from lfconsist.model import check_depth, check_view_image


def _views(radius, h=8, w=8):
    rng = np.random.default_rng(0)
    return {idx: rng.random((h, w, 3)).astype(np.float32)
            for idx in grid_indices(radius, radius)}


def test_grid_completeness_count():
    for r in (0, 1, 2):
        lf = LightField(radius_s=r, radius_t=r, views=_views(r))
        assert len(lf) == (2 * r + 1) ** 2
        assert len(set(lf.indices())) == len(lf)


def test_missing_view_names_index():
    views = _views(1)
    del views[ViewIndex(1, -1)]
    with pytest.raises(IncompleteGridError) as e:
        LightField(radius_s=1, radius_t=1, views=views)
    assert e.value.view == (1, -1)


def test_mismatched_view_shape_rejected():
    views = _views(1)
    views[ViewIndex(0, 1)] = np.zeros((4, 8, 3), dtype=np.float32)
    with pytest.raises(DimensionMismatchError):
        LightField(radius_s=1, radius_t=1, views=views)


def test_view_image_range_checked():
    with pytest.raises(ValueError):
        check_view_image(np.full((4, 4, 3), 1.5, dtype=np.float32))
    with pytest.raises(ValueError):
        check_view_image(np.full((4, 4, 3), np.nan, dtype=np.float32))


def test_depth_must_be_positive_and_finite():
    bad = np.ones((4, 4), dtype=np.float32)
    bad[2, 1] = 0.0
    with pytest.raises(InvalidDepthError) as e:
        check_depth(bad)
    assert "x=1" in str(e.value) and "y=2" in str(e.value)


def test_depth_shape_must_match_views():
    with pytest.raises(DimensionMismatchError):
        LightField(radius_s=0, radius_t=0, views=_views(0),
                   central_depth=np.ones((4, 4), dtype=np.float32))


def test_central_disparity_must_be_fully_valid():
    vals = np.zeros((4, 4), dtype=np.float32)
    vals[0, 0] = np.nan
    with pytest.raises(ValueError):
        DisparityField(ViewIndex(0, 0), vals)
    # but side views may carry invalid pixels
    f = DisparityField(ViewIndex(1, 0), vals)
    assert f.valid.sum() == 15
