"""Scikit-learn style wrappers around the pipeline stages.

``DepthCalibrator`` fits the depth-to-disparity mapping on a light field;
``ConsistencyEnforcer`` fits the geometry (reversed disparities and
confidence masks) of an original light field, then transforms a set of
independently stylized views into a warp-blended, angularly consistent
set and scores stylizations by their aggregate masked disparity loss.
"""

from __future__ import annotations

from typing import Dict, Optional

import numpy as np
from sklearn.base import BaseEstimator

from . import consistency, geometry
from .calibrate import calibrate
from .model import DisparityField, LightField, ViewIndex


class DepthCalibrator(BaseEstimator):
    """Estimates scale/bias turning inverse depth into pixel disparity."""

    def __init__(self, alpha_steps: int = 64, beta_steps: int = 64,
                 beta_max: float = 8.0, refine_tol: float = 1e-5):
        self.alpha_steps = alpha_steps
        self.beta_steps = beta_steps
        self.beta_max = beta_max
        self.refine_tol = refine_tol

    def fit(self, lf: LightField, y=None):
        params, disp = calibrate(lf, alpha_steps=self.alpha_steps,
                                 beta_steps=self.beta_steps,
                                 beta_max=self.beta_max,
                                 refine_tol=self.refine_tol)
        self.alpha_ = params.alpha
        self.beta_ = params.beta
        self.residual_ = params.residual
        self.degenerate_ = params.degenerate
        self.central_disparity_ = disp
        return self

    def transform(self, depth: np.ndarray) -> np.ndarray:
        if not hasattr(self, "alpha_"):
            raise RuntimeError("DepthCalibrator is not fitted")
        from .calibrate import invert_depth

        return (self.alpha_ * invert_depth(depth) + self.beta_).astype(np.float32)

    def fit_transform(self, lf: LightField, y=None) -> np.ndarray:
        return self.fit(lf).central_disparity_.values


class ConsistencyEnforcer(BaseEstimator):
    """Learns per-view geometry from a light field, then warp-blends
    stylized views against the stylized central view."""

    def __init__(self, epsilon: float = 1.4, search_margin: float = 1.0,
                 threads: Optional[int] = None):
        self.epsilon = epsilon
        self.search_margin = search_margin
        self.threads = threads

    def fit(self, lf: LightField, central_disparity: DisparityField):
        cfg = geometry.ReversalConfig(epsilon=self.epsilon,
                                      search_margin=self.search_margin)
        self.disparities_, self.masks_ = geometry.reverse_all(
            lf, central_disparity, cfg, threads=self.threads)
        return self

    def _check_fitted(self):
        if not hasattr(self, "disparities_"):
            raise RuntimeError("ConsistencyEnforcer is not fitted")

    def transform(self, stylized: Dict[ViewIndex, np.ndarray]
                  ) -> Dict[ViewIndex, np.ndarray]:
        self._check_fitted()
        return consistency.warp_blend_all(stylized, self.disparities_, self.masks_,
                                          threads=self.threads)

    def report(self, stylized: Dict[ViewIndex, np.ndarray]) -> consistency.ConsistencyReport:
        self._check_fitted()
        return consistency.evaluate(stylized, self.disparities_, self.masks_,
                                    threads=self.threads)

    def score(self, stylized: Dict[ViewIndex, np.ndarray]) -> float:
        """Negated aggregate disparity loss (higher is more consistent)."""
        return -self.report(stylized).aggregate_sum
