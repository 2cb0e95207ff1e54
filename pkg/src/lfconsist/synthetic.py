"""Deterministic synthetic light fields with exact ground truth.

Scenes are stacks of fronto-parallel textured rectangles, each at a
constant integer disparity.  A rectangle at disparity ``d`` appears in
view ``(s, t)`` shifted by ``(s*d, t*d)`` pixels, so every forward and
backward correspondence is an exact integer shift and oracle comparisons
can use strict equality.  Textures are quantized to the 8-bit grid so a
PNG round trip is bitwise lossless.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import numpy as np

from .errors import CoverageError
from .model import DisparityField, LightField, ViewIndex, grid_indices


@dataclass(frozen=True)
class Layer:
    """A textured rectangle at constant disparity, in central-view coords.

    The rectangle may extend beyond the frame; a background layer must be
    large enough to keep the frame covered after the maximal view shift.
    ``color``, when given, replaces the procedural noise texture.
    """

    x0: int
    y0: int
    width: int
    height: int
    disparity: float
    color: Optional[Tuple[float, float, float]] = None

    def __post_init__(self):
        if self.width <= 0 or self.height <= 0:
            raise ValueError("layer extent must be positive")
        if float(self.disparity) != int(self.disparity):
            raise ValueError(
                f"synthetic layers require integer disparities, got {self.disparity}"
            )


@dataclass(frozen=True)
class SyntheticScene:
    """Back-to-front layer stack; front layers have strictly larger disparity."""

    layers: List[Layer]
    seed: int = 0

    def __post_init__(self):
        if not self.layers:
            raise ValueError("scene needs at least one layer")
        disps = [l.disparity for l in self.layers]
        if any(b <= a for a, b in zip(disps, disps[1:])):
            raise ValueError("layers must be sorted back-to-front by increasing disparity")


def background_layer(disparity: float, width: int, height: int,
                     radius_s: int, radius_t: int,
                     color: Optional[Tuple[float, float, float]] = None) -> Layer:
    """Full-frame layer dilated so it stays covering after the maximal shift."""
    d = abs(int(disparity))
    mx, my = radius_s * d + 1, radius_t * d + 1
    return Layer(-mx, -my, width + 2 * mx, height + 2 * my, disparity, color)


def _texture(layer: Layer, index: int, seed: int) -> np.ndarray:
    if layer.color is not None:
        tex = np.empty((layer.height, layer.width, 3), dtype=np.float32)
        tex[:] = np.round(np.asarray(layer.color, dtype=np.float32) * 255.0) / 255.0
        return tex
    rng = np.random.default_rng([seed & 0xFFFFFFFFFFFFFFFF, index])
    tex = rng.integers(0, 256, size=(layer.height, layer.width, 3), dtype=np.uint8)
    return tex.astype(np.float32) / 255.0


def _paint(canvas: np.ndarray, ids: np.ndarray, tex: np.ndarray, layer: Layer,
           index: int, shift: Tuple[int, int]) -> None:
    """Overwrite canvas with layer ``index`` shifted by (sx, sy) pixels."""
    h, w = canvas.shape[:2]
    sx, sy = shift
    x0, y0 = layer.x0 + sx, layer.y0 + sy
    # clip the shifted rectangle against the frame
    fx0, fy0 = max(x0, 0), max(y0, 0)
    fx1, fy1 = min(x0 + layer.width, w), min(y0 + layer.height, h)
    if fx0 >= fx1 or fy0 >= fy1:
        return
    tx0, ty0 = fx0 - x0, fy0 - y0
    canvas[fy0:fy1, fx0:fx1] = tex[ty0:ty0 + (fy1 - fy0), tx0:tx0 + (fx1 - fx0)]
    ids[fy0:fy1, fx0:fx1] = index


def generate_synthetic(scene: SyntheticScene, radius_s: int, radius_t: int,
                       width: int, height: int,
                       depth_alpha: Optional[float] = None,
                       depth_beta: Optional[float] = None,
                       ) -> Tuple[LightField, Dict[ViewIndex, DisparityField]]:
    """Render a scene into a light field plus exact per-view ground truth.

    Ground-truth disparity assigns each pixel the disparity of its visible
    layer; validity marks pixels whose visible surface is hidden (or out of
    frame) in the central view as invalid (NaN).

    When ``depth_alpha``/``depth_beta`` are given, a central depth map with
    ``disparity = depth_alpha / depth + depth_beta`` is embedded, for
    calibration recovery tests; this requires ``d - depth_beta > 0`` for
    every layer disparity.
    """
    textures = [_texture(l, i, scene.seed) for i, l in enumerate(scene.layers)]

    def render(s: int, t: int) -> Tuple[np.ndarray, np.ndarray]:
        canvas = np.zeros((height, width, 3), dtype=np.float32)
        ids = np.full((height, width), -1, dtype=np.int32)
        for i, layer in enumerate(scene.layers):
            d = int(layer.disparity)
            _paint(canvas, ids, textures[i], layer, i, (s * d, t * d))
        if (ids < 0).any():
            y, x = np.argwhere(ids < 0)[0]
            raise CoverageError(
                f"view (s={s}, t={t}): frame pixel (x={x}, y={y}) not covered; "
                "enlarge the background layer"
            )
        return canvas, ids

    central_img, central_ids = render(0, 0)
    disp_of = np.asarray([l.disparity for l in scene.layers], dtype=np.float32)

    views: Dict[ViewIndex, np.ndarray] = {}
    truth: Dict[ViewIndex, DisparityField] = {}
    ys, xs = np.mgrid[0:height, 0:width]
    for idx in grid_indices(radius_s, radius_t):
        if idx == (0, 0):
            img, ids = central_img, central_ids
        else:
            img, ids = render(idx.s, idx.t)
        views[idx] = img
        gt = disp_of[ids]
        if idx != (0, 0):
            # a pixel is valid iff its visible surface is also the visible
            # surface at the corresponding central-view position
            d = gt.astype(np.int64)
            xc = xs - idx.s * d
            yc = ys - idx.t * d
            inside = (xc >= 0) & (xc < width) & (yc >= 0) & (yc < height)
            same = np.zeros_like(inside)
            same[inside] = central_ids[yc[inside], xc[inside]] == ids[inside]
            gt = np.where(inside & same, gt, np.nan).astype(np.float32)
        truth[idx] = DisparityField(idx, gt)

    depth = None
    if depth_alpha is not None or depth_beta is not None:
        if depth_alpha is None or depth_beta is None:
            raise ValueError("depth_alpha and depth_beta must be given together")
        d0 = truth[ViewIndex(0, 0)].values
        if (d0 - depth_beta <= 0).any():
            raise ValueError("depth embedding requires d - depth_beta > 0 for all layers")
        depth = (depth_alpha / (d0 - depth_beta)).astype(np.float32)

    lf = LightField(radius_s=radius_s, radius_t=radius_t, views=views,
                    central_depth=depth)
    return lf, truth
