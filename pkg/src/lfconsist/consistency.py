"""Image-domain consistency: masked disparity loss, warp-blend, reports.

The disparity loss follows the masked squared-difference form: the
confidence mask multiplies the residual inside the square, so scaling the
mask by lambda scales the loss sum by lambda^2.  Absolute magnitudes are
unit-dependent; comparisons across pipelines are ratio-based.
"""

from __future__ import annotations

import csv
import json
import math
from dataclasses import dataclass, field
from typing import Dict, Optional

import numpy as np

from .errors import DimensionMismatchError
from .geometry import backward_warp
from .model import ConfidenceMask, DisparityField, LightField, ViewIndex
from .parallel import map_views


@dataclass(frozen=True)
class ViewLoss:
    view: ViewIndex
    loss_sum: float
    loss_mean: float
    masked_pixel_count: int


@dataclass(frozen=True)
class ConsistencyReport:
    """Per-view masked disparity losses plus per-view averages."""

    per_view: Dict[ViewIndex, ViewLoss]
    aggregate_sum: float
    aggregate_mean: float

    def to_dict(self) -> dict:
        rows = [
            {
                "s": v.view.s,
                "t": v.view.t,
                "disparity_loss_sum": v.loss_sum,
                "disparity_loss_mean": v.loss_mean,
                "masked_pixel_count": v.masked_pixel_count,
            }
            for v in sorted(self.per_view.values(), key=lambda v: (v.view.t, v.view.s))
        ]
        return {
            "per_view": rows,
            "aggregate": {
                "disparity_loss_sum": self.aggregate_sum,
                "disparity_loss_mean": self.aggregate_mean,
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as f:
            writer = csv.writer(f)
            writer.writerow(["s", "t", "loss_sum", "loss_mean", "masked_count"])
            for v in sorted(self.per_view.values(), key=lambda v: (v.view.t, v.view.s)):
                writer.writerow([v.view.s, v.view.t,
                                 repr(v.loss_sum), repr(v.loss_mean),
                                 v.masked_pixel_count])


def disparity_loss(stylized_view: np.ndarray, stylized_central: np.ndarray,
                   disp: DisparityField, mask: ConfidenceMask) -> ViewLoss:
    """Masked squared difference against the warped stylized central view.

    Sum runs over defined pixels and channels of (M * (I' - W(I'_00, D)))^2;
    the mean divides by masked pixels (M > 0 and defined) times channels.
    """
    if stylized_view.shape != stylized_central.shape:
        raise DimensionMismatchError(
            f"view {stylized_view.shape} != central {stylized_central.shape}")
    warped, defined = backward_warp(stylized_central, disp)
    m = mask.values
    residual = m[..., None] * (stylized_view - warped)
    residual = np.where(defined[..., None], residual, 0.0)
    total = float(np.sum(residual.astype(np.float64) ** 2))
    count = int(np.count_nonzero(defined & (m > 0)))
    channels = stylized_view.shape[-1]
    mean = total / (count * channels) if count else 0.0
    return ViewLoss(ViewIndex(*disp.view), total, mean, count)


def warp_blend_view(stylized_central: np.ndarray, stylized_view: np.ndarray,
                    disp: DisparityField, mask: ConfidenceMask) -> np.ndarray:
    """M * W(I'_00, D) + (1 - M) * I'_st; the view passes through where the
    warp is undefined."""
    warped, defined = backward_warp(stylized_central, disp)
    m = np.where(defined, mask.values, 0.0)[..., None]
    out = m * warped + (1.0 - m) * stylized_view
    return out.astype(np.float32)


def warp_blend_all(stylized: Dict[ViewIndex, np.ndarray],
                   disps: Dict[ViewIndex, DisparityField],
                   masks: Dict[ViewIndex, ConfidenceMask],
                   threads: Optional[int] = None) -> Dict[ViewIndex, np.ndarray]:
    """Blend every non-central view; the central view passes through."""
    central = stylized[ViewIndex(0, 0)]

    def job(idx: ViewIndex):
        idx = ViewIndex(*idx)
        if idx == (0, 0):
            return idx, central
        return idx, warp_blend_view(central, stylized[idx], disps[idx], masks[idx])

    return dict(map_views(job, sorted(stylized), threads=threads))


def evaluate(stylized: Dict[ViewIndex, np.ndarray],
             disps: Dict[ViewIndex, DisparityField],
             masks: Dict[ViewIndex, ConfidenceMask],
             threads: Optional[int] = None) -> ConsistencyReport:
    """Per-view disparity losses; the aggregate averages non-central views."""
    central = stylized[ViewIndex(0, 0)]

    def job(idx: ViewIndex):
        idx = ViewIndex(*idx)
        if idx == (0, 0):
            n = central.shape[0] * central.shape[1]
            return ViewLoss(idx, 0.0, 0.0, n)
        return disparity_loss(stylized[idx], central, disps[idx], masks[idx])

    losses = map_views(job, sorted(stylized), threads=threads)
    per_view = {v.view: v for v in losses}
    others = [v for v in losses if v.view != (0, 0)]
    agg_sum = math.fsum(v.loss_sum for v in others) / len(others) if others else 0.0
    agg_mean = math.fsum(v.loss_mean for v in others) / len(others) if others else 0.0
    return ConsistencyReport(per_view, agg_sum, agg_mean)


def pseudo_stylize(lf: LightField, seed: int = 0) -> Dict[ViewIndex, np.ndarray]:
    """Deterministic per-view stand-in for inconsistent stylization.

    Each view (central included) gets its own color-mixing matrix and
    sinusoidal spatial modulation derived from (seed, s, t), emulating the
    dramatic view-to-view differences of naive per-view stylization.
    """
    out: Dict[ViewIndex, np.ndarray] = {}
    h, w = lf.height, lf.width
    ys, xs = np.mgrid[0:h, 0:w].astype(np.float32)
    for idx in lf.indices():
        rng = np.random.default_rng(
            [seed & 0xFFFFFFFFFFFFFFFF, idx.s + 1024, idx.t + 1024])
        mix = np.eye(3, dtype=np.float32) + rng.normal(0.0, 0.25, (3, 3)).astype(np.float32)
        freq = rng.uniform(0.02, 0.12, size=2).astype(np.float32)
        phase = rng.uniform(0.0, 2 * np.pi, size=2).astype(np.float32)
        amp = float(rng.uniform(0.05, 0.20))
        wave = amp * np.sin(freq[0] * xs + phase[0]) * np.sin(freq[1] * ys + phase[1])
        img = lf.views[idx] @ mix.T + wave[..., None]
        out[idx] = np.clip(img, 0.0, 1.0).astype(np.float32)
    return out
