/**
 * Perceptual metric: content distance plus Gram-matrix style distance over
 * the feature layers of a fixed, seeded random convolutional extractor.
 *
 * A pre-trained classification network is the usual choice; none is
 * shippable here, so a frozen random-feature stack is used instead (random
 * conv features are a standing proxy for perceptual distances). The metric
 * is only used for reporting and for relative comparisons between variants,
 * where any fixed extractor ranks alike.
 */

import { Buf, Conv3x3, makeBuf } from './nn';
import { Rng } from './rng';

const EXTRACTOR_SEED = 1234;
const LAYER_CHANNELS = [3, 8, 16, 24];
/**
 * Default weight of the Gram term in the combined metric. Unit weight keeps
 * the two plain MSE terms on their natural scales; under the random
 * extractor the content term then dominates the total, which is also the
 * term whose distances are meaningfully calibrated (feature distance to the
 * view being stylized).
 */
export const DEFAULT_STYLE_WEIGHT = 1;

export class FeatureExtractor {
  readonly layers: Conv3x3[];

  constructor(seed: number = EXTRACTOR_SEED) {
    const rng = new Rng(seed);
    this.layers = LAYER_CHANNELS.slice(0, -1).map((inC, i) =>
      new Conv3x3(inC, LAYER_CHANNELS[i + 1], 2, 'relu', rng));
  }

  /** Feature maps at every layer; layer caches stay valid for backward(). */
  features(x: Buf): Buf[] {
    const out: Buf[] = [];
    let y = x;
    for (const layer of this.layers) {
      y = layer.forward(y);
      out.push(y);
    }
    return out;
  }

  /**
   * Backpropagate per-layer output gradients to the input of the most
   * recent features() call. Weights are frozen; their gradients are dropped.
   */
  backward(dFeatures: Buf[]): Buf {
    let g: Buf | null = null;
    for (let i = this.layers.length - 1; i >= 0; i--) {
      const extra = dFeatures[i];
      if (g === null) {
        g = extra;
      } else {
        for (let j = 0; j < g.data.length; j++) g.data[j] += extra.data[j];
      }
      g = this.layers[i].backward(g);
    }
    for (const layer of this.layers) {
      for (const p of layer.params()) p.grad.fill(0);
    }
    return g!;
  }
}

let shared: FeatureExtractor | null = null;
export function sharedExtractor(): FeatureExtractor {
  if (!shared) shared = new FeatureExtractor();
  return shared;
}

/** Channel covariance of a (h*w, c) feature map, normalized by h*w*c. */
export function gramMatrix(f: Buf): Float32Array {
  const { h, w, c } = f;
  const g = new Float32Array(c * c);
  const n = h * w;
  for (let i = 0; i < n; i++) {
    const base = i * c;
    for (let a = 0; a < c; a++) {
      const fa = f.data[base + a];
      if (fa === 0) continue;
      for (let b = 0; b < c; b++) g[a * c + b] += fa * f.data[base + b];
    }
  }
  const norm = 1 / (n * c);
  for (let i = 0; i < g.length; i++) g[i] *= norm;
  return g;
}

export interface PerceptualLoss {
  content: number;
  style: number;
  total: number;
}

const mse = (a: Float32Array, b: Float32Array): number => {
  let s = 0;
  for (let i = 0; i < a.length; i++) {
    const d = a[i] - b[i];
    s += d * d;
  }
  return s / a.length;
};

/**
 * Content term: MSE between deepest-layer features of the stylized image and
 * the content image. Style term: summed Gram MSE against the style image
 * across all layers, scaled by styleWeight.
 */
export function perceptualLoss(
  stylized: Buf, content: Buf, style: Buf,
  styleWeight: number = DEFAULT_STYLE_WEIGHT,
  extractor: FeatureExtractor = sharedExtractor(),
): PerceptualLoss {
  const fc = extractor.features(content).map((f) => f.data.slice());
  const fy = extractor.features(style).map(gramMatrix);
  const fs = extractor.features(stylized);
  const c = mse(fs[fs.length - 1].data, fc[fc.length - 1]);
  let s = 0;
  for (let i = 0; i < fs.length; i++) s += mse(gramMatrix(fs[i]), fy[i]);
  return { content: c, style: styleWeight * s, total: c + styleWeight * s };
}

/**
 * Gradient of the total perceptual loss with respect to the stylized image.
 * Recomputes the extractor forward on the stylized image, so it is safe to
 * call after other extractor uses.
 */
export function perceptualGrad(
  stylized: Buf, content: Buf, style: Buf,
  styleWeight: number = DEFAULT_STYLE_WEIGHT,
  extractor: FeatureExtractor = sharedExtractor(),
): Buf {
  const fc = extractor.features(content).map((f) => f.data.slice());
  const styleGrams = extractor.features(style).map(gramMatrix);
  const fs = extractor.features(stylized); // caches must be from this image
  const dFeatures: Buf[] = [];
  for (let i = 0; i < fs.length; i++) {
    const f = fs[i];
    const { h, w, c } = f;
    const d = makeBuf(h, w, c);
    // style term: d mse(G, G*)/dF = (2 / c^2) * F (dG + dG^T) / (h*w*c)
    const g = gramMatrix(f);
    const gs = styleGrams[i];
    const dG = new Float32Array(c * c);
    const coef = (2 * styleWeight) / (c * c);
    for (let j = 0; j < dG.length; j++) dG[j] = coef * (g[j] - gs[j]);
    const norm = 1 / (h * w * c);
    const n = h * w;
    for (let p = 0; p < n; p++) {
      const base = p * c;
      for (let a = 0; a < c; a++) {
        let acc = 0;
        for (let b = 0; b < c; b++) {
          acc += f.data[base + b] * (dG[a * c + b] + dG[b * c + a]);
        }
        d.data[base + a] = acc * norm;
      }
    }
    if (i === fs.length - 1) {
      // content term on the deepest layer
      const cc = 2 / f.data.length;
      for (let j = 0; j < f.data.length; j++) {
        d.data[j] += cc * (f.data[j] - fc[i][j]);
      }
    }
    dFeatures.push(d);
  }
  return extractor.backward(dFeatures);
}

/** Deterministic procedural style target used when no style image is given. */
export function proceduralStyleImage(width: number, height: number, seed = 7): Buf {
  const rng = new Rng(seed);
  const img = makeBuf(height, width, 3);
  for (let y = 0; y < height; y++) {
    for (let x = 0; x < width; x++) {
      const band = (Math.sin(0.21 * x + 0.13 * y) + 1) * 0.35;
      const base = (y * width + x) * 3;
      for (let c = 0; c < 3; c++) {
        img.data[base + c] = Math.min(1, Math.max(0, band + rng.gauss() * 0.15));
      }
    }
  }
  return img;
}
