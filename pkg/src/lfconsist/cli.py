"""Command-line pipeline: synth -> calibrate -> reverse -> pseudostyle ->
warpblend -> eval, plus the refocus/epi validation renderers.

Stages communicate exclusively through files (manifest JSON, PNG views,
PFM maps), so any stage can be swapped for an external tool, e.g. a real
stylizer in place of ``pseudostyle``.  ``LFCONSIST_THREADS`` caps internal
parallelism (0 = auto); outputs are byte-identical for any thread count.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Dict, Tuple

import click
import numpy as np

from . import consistency, geometry, io, render
from .calibrate import calibrate as run_calibrate
from .errors import LightFieldError
from .model import ConfidenceMask, DisparityField, LightField, ViewIndex, grid_indices
from .synthetic import Layer, SyntheticScene, background_layer, generate_synthetic


def _out_dir(path: str) -> Path:
    p = Path(path)
    p.mkdir(parents=True, exist_ok=True)
    return p


def _write_geometry(out: Path, disps, masks) -> None:
    for idx in sorted(disps):
        io.save_map(disps[idx], out / io.disp_name(idx))
        io.save_map(masks[idx], out / io.mask_name(idx))


def _read_geometry(geom: Path, rs: int, rt: int
                   ) -> Tuple[Dict[ViewIndex, DisparityField], Dict[ViewIndex, ConfidenceMask]]:
    disps, masks = {}, {}
    for idx in grid_indices(rs, rt):
        dpath, mpath = geom / io.disp_name(idx), geom / io.mask_name(idx)
        if not dpath.exists() or not mpath.exists():
            raise LightFieldError(f"geometry files missing for view {tuple(idx)} in {geom}")
        disps[idx] = DisparityField(idx, io.read_pfm(dpath))
        masks[idx] = ConfidenceMask(idx, np.clip(io.read_pfm(mpath), 0.0, 1.0))
    return disps, masks


def _read_styled(styled: Path, rs: int, rt: int, pattern: str) -> Dict[ViewIndex, np.ndarray]:
    out = {}
    for idx in grid_indices(rs, rt):
        path = styled / (pattern % (idx.s, idx.t))
        if not path.exists():
            raise LightFieldError(f"stylized view missing: {path}")
        out[idx] = io.read_view(path)
    return out


def _write_styled(out: Path, views: Dict[ViewIndex, np.ndarray], pattern: str) -> None:
    for idx in sorted(views):
        io.write_view(out / (pattern % (idx.s, idx.t)), views[idx])


@click.group()
def cli():
    """Angular-consistency toolkit for stylized light fields."""


@cli.command()
@click.option("--grid", default=4, show_default=True, help="Angular radius (grid is (2r+1)^2).")
@click.option("--size", default="96x96", show_default=True, help="View size WxH.")
@click.option("--seed", default=0, show_default=True)
@click.option("--back-d", default=0, show_default=True, type=int,
              help="Background layer disparity.")
@click.option("--front-d", default=2, show_default=True, type=int,
              help="Front rectangle disparity (must exceed --back-d).")
@click.option("--out", required=True, help="Output directory.")
def synth(grid, size, seed, back_d, front_d, out):
    """Generate a two-layer synthetic light field with an embedded depth map."""
    w, h = (int(v) for v in size.lower().split("x"))
    scene = SyntheticScene(layers=[
        background_layer(back_d, w, h, grid, grid),
        Layer(w // 4, h // 4, w // 3, h // 3, front_d),
    ], seed=seed)
    # depth = alpha / (d - beta) must stay positive for both layers
    beta = float(back_d - 1)
    lf, _ = generate_synthetic(scene, grid, grid, w, h,
                               depth_alpha=3.0, depth_beta=beta)
    manifest = io.save_light_field(lf, _out_dir(out))
    click.echo(f"wrote {manifest}")


@cli.command("calibrate")
@click.option("--in", "manifest", required=True, help="Manifest JSON.")
@click.option("--out", required=True, help="Output directory.")
def calibrate_cmd(manifest, out):
    """Fit (alpha, beta) and write the calibrated central disparity map."""
    lf = io.load_light_field(manifest)
    params, disp = run_calibrate(lf)
    outp = _out_dir(out)
    (outp / "calibration.json").write_text(json.dumps({
        "alpha": params.alpha, "beta": params.beta,
        "residual": params.residual, "degenerate": params.degenerate,
    }, indent=2, sort_keys=True) + "\n")
    io.save_map(disp, outp / io.disp_name(ViewIndex(0, 0)))
    if params.degenerate:
        click.echo("warning: degenerate calibration (no disparity signal)", err=True)
    click.echo(f"alpha={params.alpha:.6g} beta={params.beta:.6g} "
               f"residual={params.residual:.6g}")


@cli.command()
@click.option("--in", "manifest", required=True, help="Manifest JSON.")
@click.option("--disp", "disp_path", required=True, help="Central disparity PFM.")
@click.option("--out", required=True, help="Output directory.")
@click.option("--epsilon", default=1.4, show_default=True)
def reverse(manifest, disp_path, out, epsilon):
    """Reverse the central disparity into per-view disparity and mask PFMs."""
    lf = io.load_light_field(manifest)
    central = DisparityField(ViewIndex(0, 0), io.read_pfm(disp_path))
    cfg = geometry.ReversalConfig(epsilon=epsilon)
    disps, masks = geometry.reverse_all(lf, central, cfg)
    _write_geometry(_out_dir(out), disps, masks)
    click.echo(f"wrote {2 * len(disps)} maps to {out}")


@cli.command()
@click.option("--in", "manifest", required=True, help="Manifest JSON.")
@click.option("--seed", default=0, show_default=True)
@click.option("--out", required=True, help="Output directory.")
def pseudostyle(manifest, seed, out):
    """Apply the deterministic per-view pseudo-stylizer (naive baseline)."""
    lf = io.load_light_field(manifest)
    styled = consistency.pseudo_stylize(lf, seed=seed)
    _write_styled(_out_dir(out), styled, "styl_s%d_t%d.png")
    click.echo(f"wrote {len(styled)} stylized views to {out}")


@cli.command()
@click.option("--in", "manifest", required=True, help="Manifest JSON (for the grid).")
@click.option("--styled", required=True, help="Directory of stylized views.")
@click.option("--geom", required=True, help="Directory of disparity/mask PFMs.")
@click.option("--out", required=True, help="Output directory.")
@click.option("--styled-pattern", default="styl_s%d_t%d.png", show_default=True)
def warpblend(manifest, styled, geom, out, styled_pattern):
    """Blend the warped stylized central view into every stylized view."""
    lf = io.load_light_field(manifest)
    views = _read_styled(Path(styled), lf.radius_s, lf.radius_t, styled_pattern)
    disps, masks = _read_geometry(Path(geom), lf.radius_s, lf.radius_t)
    blended = consistency.warp_blend_all(views, disps, masks)
    _write_styled(_out_dir(out), blended, "blend_s%d_t%d.png")
    click.echo(f"wrote {len(blended)} blended views to {out}")


@cli.command("eval")
@click.option("--in", "manifest", required=True, help="Manifest JSON (for the grid).")
@click.option("--styled", required=True, help="Directory of stylized views.")
@click.option("--geom", required=True, help="Directory of disparity/mask PFMs.")
@click.option("--out", required=True, help="Output directory.")
@click.option("--styled-pattern", default="styl_s%d_t%d.png", show_default=True)
@click.option("--csv", "write_csv", is_flag=True, help="Also write report.csv.")
def eval_cmd(manifest, styled, geom, out, styled_pattern, write_csv):
    """Write the masked disparity loss report for a stylized view set."""
    lf = io.load_light_field(manifest)
    views = _read_styled(Path(styled), lf.radius_s, lf.radius_t, styled_pattern)
    disps, masks = _read_geometry(Path(geom), lf.radius_s, lf.radius_t)
    report = consistency.evaluate(views, disps, masks)
    outp = _out_dir(out)
    (outp / "report.json").write_text(report.to_json())
    if write_csv:
        report.write_csv(outp / "report.csv")
    click.echo(f"aggregate disparity loss (sum): {report.aggregate_sum:.6g}")


@cli.command("refocus")
@click.option("--in", "manifest", required=True, help="Manifest JSON.")
@click.option("--slope", multiple=True, type=float, required=True,
              help="Disparity slope; repeatable for a focal stack.")
@click.option("--out", required=True, help="Output directory.")
def refocus_cmd(manifest, slope, out):
    """Render shift-and-add refocused slices."""
    lf = io.load_light_field(manifest)
    outp = _out_dir(out)
    for m in slope:
        sl = render.refocus(lf, m)
        io.write_view(outp / f"refocus_slope{m:g}.png", sl.image)
    click.echo(f"wrote {len(slope)} focal slices to {out}")


@cli.command("epi")
@click.option("--in", "manifest", required=True, help="Manifest JSON.")
@click.option("--row", required=True, type=int, help="Image row y.")
@click.option("--t", "t_index", default=0, show_default=True, type=int)
@click.option("--out", required=True, help="Output directory.")
def epi_cmd(manifest, row, t_index, out):
    """Extract an epipolar image at a fixed row and vertical view index."""
    lf = io.load_light_field(manifest)
    epi = render.extract_epi(lf, row, t_index)
    path = _out_dir(out) / f"epi_row{row}_t{t_index}.png"
    io.write_view(path, epi.image)
    click.echo(f"wrote {path}")


@cli.command()
@click.option("--in", "manifest", required=True, help="Manifest JSON.")
@click.option("--out", required=True, help="Output directory.")
@click.option("--epsilon", default=1.4, show_default=True)
@click.option("--seed", default=0, show_default=True)
def pipeline(manifest, out, epsilon, seed):
    """calibrate -> reverse -> pseudostyle -> warpblend -> eval."""
    lf = io.load_light_field(manifest)
    outp = _out_dir(out)
    params, central = run_calibrate(lf)
    (outp / "calibration.json").write_text(json.dumps({
        "alpha": params.alpha, "beta": params.beta,
        "residual": params.residual, "degenerate": params.degenerate,
    }, indent=2, sort_keys=True) + "\n")
    io.save_map(central, outp / io.disp_name(ViewIndex(0, 0)))
    cfg = geometry.ReversalConfig(epsilon=epsilon)
    disps, masks = geometry.reverse_all(lf, central, cfg)
    _write_geometry(outp, disps, masks)
    styled = consistency.pseudo_stylize(lf, seed=seed)
    _write_styled(outp, styled, "styl_s%d_t%d.png")
    blended = consistency.warp_blend_all(styled, disps, masks)
    _write_styled(outp, blended, "blend_s%d_t%d.png")
    report = consistency.evaluate(blended, disps, masks)
    (outp / "report.json").write_text(report.to_json())
    report.write_csv(outp / "report.csv")
    click.echo(f"pipeline done; aggregate disparity loss (sum): "
               f"{report.aggregate_sum:.6g}")


def main(argv=None) -> int:
    try:
        cli.main(args=argv, standalone_mode=False)
        return 0
    except click.ClickException as e:
        e.show(file=sys.stderr)
        return e.exit_code
    except click.exceptions.Abort:
        print("aborted", file=sys.stderr)
        return 130
    except LightFieldError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
