"""Validation renderers: shift-and-add refocusing and epipolar images."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Mapping, Tuple, Union

import numpy as np

from .model import LightField, ViewIndex

ViewSet = Union[LightField, Mapping[ViewIndex, np.ndarray]]


def _views_of(data: ViewSet) -> Dict[ViewIndex, np.ndarray]:
    if isinstance(data, LightField):
        return {idx: data.views[idx] for idx in data.indices()}
    return {ViewIndex(*k): np.asarray(v, dtype=np.float32) for k, v in data.items()}


@dataclass(frozen=True)
class FocalSlice:
    """Coverage-normalized mean of views aligned at a disparity slope."""

    slope: float
    image: np.ndarray
    coverage: np.ndarray


@dataclass(frozen=True)
class EpipolarImage:
    """Row y of every view along one angular axis, stacked by increasing s."""

    row: int
    fixed_t: int
    image: np.ndarray


def _bilinear(src: np.ndarray, u: np.ndarray, v: np.ndarray
              ) -> Tuple[np.ndarray, np.ndarray]:
    h, w = src.shape[:2]
    inside = (u >= 0) & (u <= w - 1) & (v >= 0) & (v <= h - 1)
    uc = np.where(inside, u, 0.0)
    vc = np.where(inside, v, 0.0)
    x0 = np.floor(uc).astype(np.int64)
    y0 = np.floor(vc).astype(np.int64)
    x1 = np.minimum(x0 + 1, w - 1)
    y1 = np.minimum(y0 + 1, h - 1)
    fx = (uc - x0).astype(np.float32)[..., None]
    fy = (vc - y0).astype(np.float32)[..., None]
    top = src[y0, x0] * (1 - fx) + src[y0, x1] * fx
    bot = src[y1, x0] * (1 - fx) + src[y1, x1] * fx
    return (top * (1 - fy) + bot * fy).astype(np.float32), inside


def refocus(data: ViewSet, slope: float) -> FocalSlice:
    """Shift-and-add: average views sampled at (x + s*slope, y + t*slope).

    Out-of-bounds taps are excluded and the mean normalized by per-pixel
    coverage, so borders are not darkened by zero padding.
    """
    if not np.isfinite(slope):
        raise ValueError("slope must be finite")
    views = _views_of(data)
    shape = next(iter(views.values())).shape
    h, w = shape[:2]
    ys, xs = np.mgrid[0:h, 0:w].astype(np.float32)
    acc = np.zeros(shape, dtype=np.float64)
    coverage = np.zeros((h, w), dtype=np.int32)
    for idx in sorted(views):
        sample, inside = _bilinear(views[idx], xs + idx.s * slope, ys + idx.t * slope)
        acc += np.where(inside[..., None], sample, 0.0)
        coverage += inside
    image = np.zeros(shape, dtype=np.float32)
    covered = coverage > 0
    image[covered] = (acc[covered] / coverage[covered, None]).astype(np.float32)
    return FocalSlice(slope=float(slope), image=image, coverage=coverage)


def extract_epi(data: ViewSet, y: int, t: int = 0) -> EpipolarImage:
    """Stack row ``y`` of views (s, t) for increasing s into an EPI."""
    views = _views_of(data)
    ss = sorted({idx.s for idx in views})
    rows = []
    for s in ss:
        idx = ViewIndex(s, t)
        if idx not in views:
            raise KeyError(f"view (s={s}, t={t}) not in the set")
        img = views[idx]
        if not 0 <= y < img.shape[0]:
            raise ValueError(f"row {y} outside image height {img.shape[0]}")
        rows.append(img[y])
    return EpipolarImage(row=y, fixed_t=t, image=np.stack(rows, axis=0))


def mean_local_variance(img: np.ndarray, radius: int = 1) -> float:
    """Mean over pixels of the variance in a (2r+1)^2 neighborhood.

    Simple sharpness proxy used to compare focal slices.
    """
    gray = np.asarray(img, dtype=np.float64)
    if gray.ndim == 3:
        gray = gray.mean(axis=-1)
    k = 2 * radius + 1
    h, w = gray.shape
    if h < k or w < k:
        raise ValueError("image smaller than the window")
    windows = np.lib.stride_tricks.sliding_window_view(gray, (k, k))
    return float(windows.var(axis=(-1, -2)).mean())
