"""Angular-consistency toolkit for stylized light fields."""

from .calibrate import CalibrationParams, calibrate, invert_depth
from .consistency import (ConsistencyReport, ViewLoss, disparity_loss,
                          evaluate, pseudo_stylize, warp_blend_all,
                          warp_blend_view)
from .errors import (CoverageError, DimensionMismatchError, IncompleteGridError,
                     InvalidDepthError, LightFieldError, ManifestError)
from .estimators import ConsistencyEnforcer, DepthCalibrator
from .geometry import (ReversalConfig, backward_warp, confidence_mask,
                       reverse_all, reverse_disparity)
from .io import (load_light_field, read_pfm, read_view, save_light_field,
                 save_map, write_pfm, write_view)
from .model import (ConfidenceMask, DisparityField, LightField, ViewIndex,
                    grid_indices)
from .render import EpipolarImage, FocalSlice, extract_epi, mean_local_variance, refocus
from .synthetic import Layer, SyntheticScene, background_layer, generate_synthetic

__version__ = "0.1.0"

__all__ = [
    "CalibrationParams", "ConfidenceMask", "ConsistencyEnforcer",
    "ConsistencyReport", "CoverageError", "DepthCalibrator",
    "DimensionMismatchError", "DisparityField", "EpipolarImage", "FocalSlice",
    "IncompleteGridError", "InvalidDepthError", "Layer", "LightField",
    "LightFieldError", "ManifestError", "ReversalConfig", "SyntheticScene",
    "ViewIndex", "ViewLoss", "backward_warp", "background_layer", "calibrate",
    "confidence_mask", "disparity_loss", "evaluate", "extract_epi",
    "generate_synthetic", "grid_indices", "invert_depth", "load_light_field",
    "mean_local_variance", "pseudo_stylize", "read_pfm", "read_view",
    "refocus", "reverse_all", "reverse_disparity", "save_light_field",
    "save_map", "warp_blend_all", "warp_blend_view", "write_pfm", "write_view",
]
