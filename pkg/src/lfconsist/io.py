"""File interchange: PNG views, PFM maps, JSON manifests.

Views travel as 8-bit RGB PNG (scaled to [0, 1] by /255 on load).
Disparity, confidence, and depth maps travel as single-channel PFM,
little-endian (negative scale header), rows bottom-to-top per the PFM
convention.  Invalid disparity pixels are stored as NaN.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Dict, Optional, Tuple, Union

import numpy as np
from PIL import Image

from .errors import DimensionMismatchError, IncompleteGridError, ManifestError
from .model import ConfidenceMask, DisparityField, LightField, ViewIndex, grid_indices

MapLike = Union[DisparityField, ConfidenceMask, np.ndarray]


# ---------------------------------------------------------------------------
# PFM

def write_pfm(path, data: np.ndarray) -> None:
    """Write a single-channel float32 PFM (little-endian, bottom-to-top)."""
    arr = np.asarray(data, dtype=np.float32)
    if arr.ndim != 2:
        raise DimensionMismatchError(f"PFM writer expects 2-D data, got {arr.shape}")
    h, w = arr.shape
    with open(path, "wb") as f:
        f.write(b"Pf\n")
        f.write(f"{w} {h}\n".encode("ascii"))
        f.write(b"-1.0\n")
        f.write(np.flipud(arr).tobytes())


def read_pfm(path) -> np.ndarray:
    """Read a single-channel PFM into a float32 (H, W) array, top-down."""
    with open(path, "rb") as f:
        header = f.readline().rstrip()
        if header != b"Pf":
            raise ManifestError(f"{path}: not a single-channel PFM (header {header!r})")
        dims = f.readline().decode("ascii").split()
        if len(dims) != 2:
            raise ManifestError(f"{path}: malformed PFM dimension line")
        w, h = int(dims[0]), int(dims[1])
        scale = float(f.readline().decode("ascii").strip())
        buf = f.read(w * h * 4)
        if len(buf) != w * h * 4:
            raise ManifestError(f"{path}: truncated PFM payload")
    dtype = "<f4" if scale < 0 else ">f4"
    arr = np.frombuffer(buf, dtype=dtype).reshape(h, w).astype(np.float32)
    return np.flipud(arr).copy()


def save_map(m: MapLike, path) -> None:
    """Save a disparity field, confidence mask, or raw 2-D map as PFM.

    Invalid disparity pixels are already NaN internally and are written
    through unchanged.
    """
    values = m.values if isinstance(m, (DisparityField, ConfidenceMask)) else m
    write_pfm(path, values)


# ---------------------------------------------------------------------------
# PNG views

def read_view(path) -> np.ndarray:
    with Image.open(path) as im:
        arr = np.asarray(im.convert("RGB"), dtype=np.float32)
    return arr / 255.0


def write_view(path, img: np.ndarray) -> None:
    arr = np.clip(np.asarray(img, dtype=np.float32), 0.0, 1.0)
    Image.fromarray((arr * 255.0 + 0.5).astype(np.uint8), mode="RGB").save(path)


# ---------------------------------------------------------------------------
# Manifest

_REQUIRED = ("grid_radius_s", "grid_radius_t", "view_pattern", "width", "height")


def load_light_field(manifest_path) -> LightField:
    """Load a light field described by a JSON manifest.

    The manifest holds ``grid_radius_s``, ``grid_radius_t``, a printf-style
    ``view_pattern`` taking (s, t), ``width``/``height``, and an optional
    ``depth`` PFM path.  Paths are resolved relative to the manifest.
    """
    manifest_path = Path(manifest_path)
    try:
        spec = json.loads(manifest_path.read_text())
    except FileNotFoundError:
        raise ManifestError(f"manifest not found: {manifest_path}")
    except json.JSONDecodeError as e:
        raise ManifestError(f"{manifest_path}: invalid JSON ({e})")
    for key in _REQUIRED:
        if key not in spec:
            raise ManifestError(f"{manifest_path}: missing field {key!r}")
    base = manifest_path.parent
    rs, rt = int(spec["grid_radius_s"]), int(spec["grid_radius_t"])
    w, h = int(spec["width"]), int(spec["height"])
    pattern = spec["view_pattern"]
    views: Dict[ViewIndex, np.ndarray] = {}
    for idx in grid_indices(rs, rt):
        try:
            rel = pattern % (idx.s, idx.t)
        except (TypeError, ValueError) as e:
            raise ManifestError(f"{manifest_path}: bad view_pattern {pattern!r} ({e})")
        path = base / rel
        if not path.exists():
            raise IncompleteGridError(idx, f"missing view (s={idx.s}, t={idx.t}): {path}")
        img = read_view(path)
        if img.shape != (h, w, 3):
            raise DimensionMismatchError(
                f"view (s={idx.s}, t={idx.t}): {path} decodes to "
                f"{img.shape[1]}x{img.shape[0]}, manifest says {w}x{h}"
            )
        views[idx] = img
    depth = None
    if spec.get("depth"):
        depth_path = base / spec["depth"]
        if not depth_path.exists():
            raise ManifestError(f"depth map not found: {depth_path}")
        depth = read_pfm(depth_path)
        if depth.shape != (h, w):
            raise DimensionMismatchError(
                f"depth {depth_path}: shape {depth.shape} != ({h}, {w})"
            )
    return LightField(radius_s=rs, radius_t=rt, views=views, central_depth=depth)


def save_light_field(lf: LightField, out_dir, view_pattern: str = "view_s%d_t%d.png",
                     depth_name: str = "depth.pfm") -> Path:
    """Write views, optional depth, and a manifest; returns the manifest path."""
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for idx, img in sorted(lf.views.items()):
        write_view(out_dir / (view_pattern % (idx.s, idx.t)), img)
    spec = {
        "grid_radius_s": lf.radius_s,
        "grid_radius_t": lf.radius_t,
        "view_pattern": view_pattern,
        "width": lf.width,
        "height": lf.height,
        "depth": None,
    }
    if lf.central_depth is not None:
        write_pfm(out_dir / depth_name, lf.central_depth)
        spec["depth"] = depth_name
    manifest = out_dir / "manifest.json"
    manifest.write_text(json.dumps(spec, indent=2, sort_keys=True) + "\n")
    return manifest


# per-view artifact naming shared by the CLI and the neural frontend
def disp_name(idx: ViewIndex) -> str:
    return f"disp_s{idx[0]}_t{idx[1]}.pfm"


def mask_name(idx: ViewIndex) -> str:
    return f"mask_s{idx[0]}_t{idx[1]}.pfm"


def styl_name(idx: ViewIndex) -> str:
    return f"styl_s{idx[0]}_t{idx[1]}.png"


_NAME_RE = re.compile(r"_s(-?\d+)_t(-?\d+)\.")


def parse_view_name(name: str) -> Optional[ViewIndex]:
    m = _NAME_RE.search(name)
    return ViewIndex(int(m.group(1)), int(m.group(2))) if m else None
