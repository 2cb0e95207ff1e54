"""Disparity reversal, confidence masks, and backward warping.

The central disparity map forward-maps central pixel (x', y') to
``(x' + s*D00(x', y'), y' + t*D00(x', y'))`` in view (s, t).  Reversal
searches, for each view pixel, the integer central candidates whose
forward projection lands within ``epsilon`` of it and keeps the one with
the largest disparity (front-most surface).  Pixels with no candidate are
disocclusions and become invalid (NaN) with confidence 0.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Optional, Tuple

import numpy as np

from .errors import DimensionMismatchError
from .model import ConfidenceMask, DisparityField, LightField, ViewIndex
from .parallel import map_views


@dataclass(frozen=True)
class ReversalConfig:
    epsilon: float = 1.4
    search_margin: float = 1.0

    def __post_init__(self):
        if self.epsilon <= 0:
            raise ValueError("epsilon must be positive")
        if self.search_margin < 0:
            raise ValueError("search_margin must be non-negative")


def backward_warp(source: np.ndarray, disp: DisparityField
                  ) -> Tuple[np.ndarray, np.ndarray]:
    """Sample ``source`` at ``(x - s*D, y - t*D)`` with bilinear interpolation.

    Returns ``(warped, defined)``; ``defined`` is False where the disparity
    is invalid or the sample point leaves the grid of pixel centers
    (out-of-image taps are never clamped).  Works for (H, W) and (H, W, C)
    sources alike; undefined output pixels are 0.
    """
    src = np.asarray(source, dtype=np.float32)
    s, t = disp.view
    d = disp.values
    h, w = src.shape[:2]
    if d.shape != (h, w):
        raise DimensionMismatchError(f"disparity {d.shape} != image {(h, w)}")
    ys, xs = np.mgrid[0:h, 0:w].astype(np.float32)
    valid = ~np.isnan(d)
    dz = np.where(valid, d, 0.0)
    u = xs - s * dz
    v = ys - t * dz
    defined = valid & (u >= 0) & (u <= w - 1) & (v >= 0) & (v <= h - 1)
    u = np.where(defined, u, 0.0)
    v = np.where(defined, v, 0.0)
    x0 = np.floor(u).astype(np.int64)
    y0 = np.floor(v).astype(np.int64)
    x1 = np.minimum(x0 + 1, w - 1)
    y1 = np.minimum(y0 + 1, h - 1)
    fx = (u - x0).astype(np.float32)
    fy = (v - y0).astype(np.float32)
    if src.ndim == 3:
        fx = fx[..., None]
        fy = fy[..., None]
    top = src[y0, x0] * (1 - fx) + src[y0, x1] * fx
    bot = src[y1, x0] * (1 - fx) + src[y1, x1] * fx
    warped = top * (1 - fy) + bot * fy
    warped = np.where(defined if src.ndim == 2 else defined[..., None],
                      warped, 0.0).astype(np.float32)
    return warped, defined


def reverse_disparity(central_disp: DisparityField, view: ViewIndex,
                      cfg: ReversalConfig = ReversalConfig()) -> DisparityField:
    """Reverse the central disparity map into view ``(s, t)``.

    Candidates are enumerated over the dilated bounding box of the epipolar
    segment; ties at equal maximal disparity are broken by smaller forward
    residual, then lexicographic (x', y'), so the result is independent of
    enumeration order.
    """
    view = ViewIndex(*view)
    if view == (0, 0):
        raise ValueError("reverse_disparity is undefined for the central view")
    s, t = view
    d0 = central_disp.values
    h, w = d0.shape
    dmin, dmax = float(d0.min()), float(d0.max())
    if not (np.isfinite(dmin) and np.isfinite(dmax)):
        raise ValueError("empty disparity range in central map")

    def offset_range(k: int) -> range:
        lo = min(-k * dmin, -k * dmax) - cfg.search_margin
        hi = max(-k * dmin, -k * dmax) + cfg.search_margin
        return range(math.floor(lo), math.ceil(hi) + 1)

    eps2 = cfg.epsilon * cfg.epsilon
    best_d = np.full((h, w), -np.inf, dtype=np.float32)
    best_r2 = np.full((h, w), np.inf, dtype=np.float32)
    found = np.zeros((h, w), dtype=bool)
    # ascending (ox, oy) iteration makes candidate (x', y') lexicographic,
    # so strict comparisons implement the documented tie-breaks
    for ox in offset_range(s):
        xa, xb = max(0, -ox), min(w, w - ox)
        if xa >= xb:
            continue
        for oy in offset_range(t):
            ya, yb = max(0, -oy), min(h, h - oy)
            if ya >= yb:
                continue
            cand = d0[ya + oy:yb + oy, xa + ox:xb + ox]
            rx = ox + s * cand
            ry = oy + t * cand
            r2 = rx * rx + ry * ry
            bd = best_d[ya:yb, xa:xb]
            br = best_r2[ya:yb, xa:xb]
            better = (r2 < eps2) & ((cand > bd) | ((cand == bd) & (r2 < br)))
            bd[better] = cand[better]
            br[better] = r2[better]
            found[ya:yb, xa:xb] |= better
    values = np.where(found, best_d, np.nan).astype(np.float32)
    return DisparityField(view, values)


def confidence_mask(lf: LightField, view: ViewIndex, disp: DisparityField
                    ) -> ConfidenceMask:
    """Correspondence confidence: 1 - ||I_st - W(I_00, D_st)|| / sqrt(3).

    Zero where the warp is undefined or the disparity invalid; clamped to
    [0, 1].
    """
    view = ViewIndex(*view)
    if ViewIndex(*disp.view) != view:
        raise ValueError(f"disparity belongs to {tuple(disp.view)}, not {tuple(view)}")
    warped, defined = backward_warp(lf.central, disp)
    diff = lf.views[view] - warped
    dist = np.sqrt(np.sum(diff * diff, axis=-1)) / np.sqrt(3.0)
    m = np.clip(1.0 - dist, 0.0, 1.0).astype(np.float32)
    m[~defined] = 0.0
    return ConfidenceMask(view, m)


def reverse_all(lf: LightField, central_disp: DisparityField,
                cfg: ReversalConfig = ReversalConfig(),
                threads: Optional[int] = None,
                ) -> Tuple[Dict[ViewIndex, DisparityField], Dict[ViewIndex, ConfidenceMask]]:
    """Reverse the central map into every view and compute all masks.

    The central view passes through with an all-ones mask.
    """
    if central_disp.shape != (lf.height, lf.width):
        raise DimensionMismatchError(
            f"central disparity {central_disp.shape} != views {(lf.height, lf.width)}"
        )

    def job(idx: ViewIndex):
        if idx == (0, 0):
            ones = ConfidenceMask(idx, np.ones((lf.height, lf.width), dtype=np.float32))
            return idx, central_disp, ones
        try:
            d = reverse_disparity(central_disp, idx, cfg)
            return idx, d, confidence_mask(lf, idx, d)
        except Exception as e:
            raise RuntimeError(f"view (s={idx.s}, t={idx.t}): {e}") from e

    results = map_views(job, lf.indices(), threads=threads)
    disps = {idx: d for idx, d, _ in results}
    masks = {idx: m for idx, _, m in results}
    return disps, masks
