"""Core data types: view grids, disparity fields, confidence masks.

Conventions used throughout the toolkit:

* Views are indexed by signed angular offsets ``(s, t)`` with ``(0, 0)``
  the central view.  A light field of radius ``(rs, rt)`` holds the full
  ``(2*rs+1) * (2*rt+1)`` grid.
* Images are float32 arrays of shape ``(H, W, 3)`` with values in [0, 1].
* A scene point with disparity ``d`` seen at ``(x, y)`` in the central
  view appears at ``(x + s*d, y + t*d)`` in view ``(s, t)``.  Backward
  warping a side view therefore samples the central view at
  ``(x - s*D(x, y), y - t*D(x, y))``.
* Disparity fields store NaN at pixels with no central correspondence
  (disocclusions); validity is derived from NaN, never from a sentinel
  magnitude.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, NamedTuple, Optional, Tuple

import numpy as np

from .errors import DimensionMismatchError, IncompleteGridError, InvalidDepthError


class ViewIndex(NamedTuple):
    s: int
    t: int


def grid_indices(radius_s: int, radius_t: int) -> Iterator[ViewIndex]:
    """All (s, t) of the grid, row-major with t as the slow axis."""
    for t in range(-radius_t, radius_t + 1):
        for s in range(-radius_s, radius_s + 1):
            yield ViewIndex(s, t)


def check_view_image(img: np.ndarray, name: str = "view") -> np.ndarray:
    """Validate an (H, W, 3) float image in [0, 1] and return it as float32."""
    arr = np.asarray(img)
    if arr.ndim != 3 or arr.shape[2] != 3:
        raise DimensionMismatchError(f"{name}: expected (H, W, 3), got {arr.shape}")
    arr = arr.astype(np.float32, copy=False)
    if not np.isfinite(arr).all():
        raise ValueError(f"{name}: non-finite pixel values")
    if arr.min() < 0.0 or arr.max() > 1.0:
        raise ValueError(f"{name}: pixel values outside [0, 1]")
    return arr


def check_depth(depth: np.ndarray) -> np.ndarray:
    """Validate a strictly positive, finite 2-D depth map."""
    arr = np.asarray(depth, dtype=np.float32)
    if arr.ndim != 2:
        raise DimensionMismatchError(f"depth: expected 2-D map, got shape {arr.shape}")
    bad = ~np.isfinite(arr) | (arr <= 0)
    if bad.any():
        y, x = np.argwhere(bad)[0]
        raise InvalidDepthError(
            f"depth: non-positive or non-finite sample {arr[y, x]!r} at (x={x}, y={y})"
        )
    return arr


@dataclass(frozen=True)
class DisparityField:
    """Per-view disparity in pixels per unit baseline step.

    ``values`` is (H, W) float32; NaN marks pixels with no central
    correspondence.  The central field (0, 0) is valid everywhere.
    """

    view: ViewIndex
    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float32)
        if arr.ndim != 2:
            raise DimensionMismatchError(f"disparity: expected 2-D, got {arr.shape}")
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "view", ViewIndex(*self.view))
        if self.view == (0, 0) and np.isnan(arr).any():
            raise ValueError("central disparity field must be valid everywhere")

    @property
    def valid(self) -> np.ndarray:
        return ~np.isnan(self.values)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.values.shape


@dataclass(frozen=True)
class ConfidenceMask:
    """Per-view correspondence confidence in [0, 1]; 0 = no correspondence."""

    view: ViewIndex
    values: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.values, dtype=np.float32)
        if arr.ndim != 2:
            raise DimensionMismatchError(f"mask: expected 2-D, got {arr.shape}")
        if not np.isfinite(arr).all() or arr.min() < 0.0 or arr.max() > 1.0:
            raise ValueError("mask values must be finite and within [0, 1]")
        object.__setattr__(self, "values", arr)
        object.__setattr__(self, "view", ViewIndex(*self.view))


@dataclass(frozen=True)
class LightField:
    """Complete grid of subaperture views with an optional central depth map."""

    radius_s: int
    radius_t: int
    views: Dict[ViewIndex, np.ndarray] = field(repr=False)
    central_depth: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        if self.radius_s < 0 or self.radius_t < 0:
            raise ValueError("grid radii must be non-negative")
        checked: Dict[ViewIndex, np.ndarray] = {}
        shape = None
        for idx in grid_indices(self.radius_s, self.radius_t):
            if idx not in self.views:
                raise IncompleteGridError(idx)
            img = check_view_image(self.views[idx], name=f"view {tuple(idx)}")
            if shape is None:
                shape = img.shape
            elif img.shape != shape:
                raise DimensionMismatchError(
                    f"view {tuple(idx)}: shape {img.shape} != {shape}"
                )
            checked[idx] = img
        extra = set(map(tuple, self.views)) - set(map(tuple, checked))
        if extra:
            raise ValueError(f"views outside the grid: {sorted(extra)}")
        object.__setattr__(self, "views", checked)
        if self.central_depth is not None:
            depth = check_depth(self.central_depth)
            if depth.shape != shape[:2]:
                raise DimensionMismatchError(
                    f"depth shape {depth.shape} != view shape {shape[:2]}"
                )
            object.__setattr__(self, "central_depth", depth)

    @property
    def central(self) -> np.ndarray:
        return self.views[ViewIndex(0, 0)]

    @property
    def height(self) -> int:
        return self.central.shape[0]

    @property
    def width(self) -> int:
        return self.central.shape[1]

    def indices(self) -> Iterator[ViewIndex]:
        return grid_indices(self.radius_s, self.radius_t)

    def __len__(self) -> int:
        return (2 * self.radius_s + 1) * (2 * self.radius_t + 1)
