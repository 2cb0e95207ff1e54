"""Depth-to-disparity calibration for the central view.

The uncalibrated depth map is inverted and mapped to pixel disparity via
``D = alpha * (1/depth) + beta``.  The pair (alpha, beta) is chosen to
maximize photometric correspondence between the view right of center and
the backward-warped central view: a coarse 64x64 grid scan followed by a
derivative-free simplex refinement.  The bias term allows a mix of
positive and negative disparities (planar horopter offset).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Tuple

import numpy as np
from scipy.optimize import minimize

from .model import DisparityField, LightField, ViewIndex, check_depth


@dataclass(frozen=True)
class CalibrationParams:
    """Scale and bias mapping inverse depth to pixel disparity.

    ``residual`` is the mean normalized RGB error at the optimum.
    ``degenerate`` flags calibrations with no disparity signal (the null
    zero-disparity warp already achieves the optimum).
    """

    alpha: float
    beta: float
    residual: float
    degenerate: bool = False


def invert_depth(depth: np.ndarray) -> np.ndarray:
    """Per-pixel 1/depth; rejects non-positive or non-finite samples."""
    return (1.0 / check_depth(depth)).astype(np.float32)


def _warp_objective(central: np.ndarray, right: np.ndarray
                    ) -> Callable[[np.ndarray], float]:
    """Mean ||I_10 - central(x - D(x,y), y)|| / sqrt(3), out-of-bounds excluded."""
    h, w = right.shape[:2]
    xs = np.arange(w, dtype=np.float32)[None, :]

    def objective(disp: np.ndarray) -> float:
        u = xs - disp
        inside = (u >= 0) & (u <= w - 1)
        if not inside.any():
            return float("inf")
        uc = np.where(inside, u, 0.0)
        x0 = np.floor(uc).astype(np.int64)
        x1 = np.minimum(x0 + 1, w - 1)
        fx = (uc - x0)[..., None].astype(np.float32)
        rows = np.arange(h)[:, None]
        pred = central[rows, x0] * (1 - fx) + central[rows, x1] * fx
        diff = right - pred
        dist = np.sqrt(np.sum(diff * diff, axis=-1)) / np.sqrt(3.0)
        return float(dist[inside].mean())

    return objective


def calibrate(lf: LightField, alpha_steps: int = 64, beta_steps: int = 64,
              beta_max: float = 8.0, refine_tol: float = 1e-5,
              ) -> Tuple[CalibrationParams, DisparityField]:
    """Recover (alpha, beta) and the calibrated central disparity map.

    Only the (0,0) -> (1,0) pair drives the objective.  The alpha grid is
    bounded so the predicted |disparity| stays below width/4; grid ties
    resolve to the smallest alpha, then the smallest beta.  The optimum
    often sits in a diagonal valley of the (alpha, beta) plane (moving
    either parameter alone breaks the dominant plane's alignment), so the
    local refinement is a Nelder-Mead simplex rather than an axis-wise
    line search.
    """
    if lf.central_depth is None:
        raise ValueError("light field has no central depth map")
    if lf.radius_s < 1:
        raise ValueError("calibration needs the view right of center (radius_s >= 1)")
    invd = invert_depth(lf.central_depth)
    right = lf.views[ViewIndex(1, 0)]
    objective = _warp_objective(lf.central, right)

    alpha_hi = (lf.width / 4.0) / float(invd.max())
    alphas = np.linspace(0.0, alpha_hi, alpha_steps)
    betas = np.linspace(-beta_max, beta_max, beta_steps)

    # coarse scan; alpha is the slow axis so argmin's first-hit rule
    # implements the smallest-alpha-then-smallest-beta tie-break
    scores = np.empty((alpha_steps, beta_steps))
    for i, a in enumerate(alphas):
        base = a * invd
        for j, b in enumerate(betas):
            scores[i, j] = objective(base + b)
    i, j = np.unravel_index(int(np.argmin(scores)), scores.shape)
    a0, b0 = float(alphas[i]), float(betas[j])

    da = float(alphas[1] - alphas[0])
    db = float(betas[1] - betas[0])
    result = minimize(
        lambda p: objective(p[0] * invd + p[1]), [a0, b0],
        method="Nelder-Mead",
        options={
            "xatol": refine_tol, "fatol": 1e-12,
            "initial_simplex": [[a0, b0], [a0 + da, b0], [a0, b0 + db]],
        })
    alpha, beta = float(result.x[0]), float(result.x[1])
    residual = objective(alpha * invd + beta)
    null_residual = objective(np.zeros_like(invd))
    degenerate = null_residual <= residual + 1e-9
    params = CalibrationParams(alpha=alpha, beta=beta, residual=residual,
                               degenerate=degenerate)
    disp = DisparityField(ViewIndex(0, 0), (alpha * invd + beta).astype(np.float32))
    return params, disp
