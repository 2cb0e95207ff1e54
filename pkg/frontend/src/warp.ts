/**
 * Backward warping and map resizing on plain float arrays.
 *
 * These run outside the autodiff graph on purpose: the warp source (central
 * artifacts) and the disparity/mask maps are frozen for a run, so every
 * warped quantity is a per-view constant that can be precomputed once.
 */

export interface Warped {
  /** Row-major (H, W, C). Zero where undefined. */
  data: Float32Array;
  /** Row-major (H, W); 1 where all sample taps were in bounds. */
  defined: Float32Array;
}

/**
 * Sample source(x - s*d, y - t*d) bilinearly for view (s, t).
 * Pixels whose disparity is NaN or whose sample point leaves the frame are
 * marked undefined.
 */
export function backwardWarp(
  source: Float32Array, width: number, height: number, channels: number,
  disparity: Float32Array, s: number, t: number,
): Warped {
  const data = new Float32Array(width * height * channels);
  const defined = new Float32Array(width * height);
  for (let y = 0; y < height; y++) {
    for (let x = 0; x < width; x++) {
      const d = disparity[y * width + x];
      if (Number.isNaN(d)) continue;
      const xs = x - s * d;
      const ys = y - t * d;
      if (xs < 0 || xs > width - 1 || ys < 0 || ys > height - 1) continue;
      defined[y * width + x] = 1;
      const x0 = Math.floor(xs);
      const y0 = Math.floor(ys);
      const x1 = Math.min(x0 + 1, width - 1);
      const y1 = Math.min(y0 + 1, height - 1);
      const fx = xs - x0;
      const fy = ys - y0;
      for (let c = 0; c < channels; c++) {
        const v00 = source[(y0 * width + x0) * channels + c];
        const v01 = source[(y0 * width + x1) * channels + c];
        const v10 = source[(y1 * width + x0) * channels + c];
        const v11 = source[(y1 * width + x1) * channels + c];
        data[(y * width + x) * channels + c] =
          (1 - fy) * ((1 - fx) * v00 + fx * v01) + fy * ((1 - fx) * v10 + fx * v11);
      }
    }
  }
  return { data, defined };
}

/** Bilinear resize of a single-channel map (align-corners sampling). */
export function resizeBilinear(
  src: Float32Array, width: number, height: number,
  outWidth: number, outHeight: number,
): Float32Array {
  const out = new Float32Array(outWidth * outHeight);
  const sx = outWidth > 1 ? (width - 1) / (outWidth - 1) : 0;
  const sy = outHeight > 1 ? (height - 1) / (outHeight - 1) : 0;
  for (let y = 0; y < outHeight; y++) {
    const ys = y * sy;
    const y0 = Math.floor(ys);
    const y1 = Math.min(y0 + 1, height - 1);
    const fy = ys - y0;
    for (let x = 0; x < outWidth; x++) {
      const xs = x * sx;
      const x0 = Math.floor(xs);
      const x1 = Math.min(x0 + 1, width - 1);
      const fx = xs - x0;
      out[y * outWidth + x] =
        (1 - fy) * ((1 - fx) * src[y0 * width + x0] + fx * src[y0 * width + x1]) +
        fy * ((1 - fx) * src[y1 * width + x0] + fx * src[y1 * width + x1]);
    }
  }
  return out;
}

export interface FeatureScaleMaps {
  disparity: Float32Array;
  mask: Float32Array;
}

/**
 * Resize a disparity/mask pair to feature resolution. Disparity values are
 * multiplied by the resolution ratio (d pixels at the image scale is
 * d * outWidth / width feature cells); cells touched by any invalid (NaN)
 * disparity sample become invalid, and the mask is zeroed there.
 */
export function mapsToFeatureScale(
  disparity: Float32Array, mask: Float32Array, width: number, height: number,
  outWidth: number, outHeight: number,
): FeatureScaleMaps {
  const n = width * height;
  const valid = new Float32Array(n);
  const filled = new Float32Array(n);
  for (let i = 0; i < n; i++) {
    const v = disparity[i];
    valid[i] = Number.isNaN(v) ? 0 : 1;
    filled[i] = Number.isNaN(v) ? 0 : v;
  }
  const scale = outWidth / width;
  const d = resizeBilinear(filled, width, height, outWidth, outHeight);
  const m = resizeBilinear(mask, width, height, outWidth, outHeight);
  const ok = resizeBilinear(valid, width, height, outWidth, outHeight);
  for (let i = 0; i < d.length; i++) {
    if (ok[i] < 0.9999) {
      d[i] = NaN;
      m[i] = 0;
    } else {
      d[i] *= scale;
    }
  }
  return { disparity: d, mask: m };
}
