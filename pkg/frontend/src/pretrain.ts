/**
 * Deterministic stand-in for externally trained stylizer weights.
 *
 * Real deployments load a weight file from an actual training run. When no
 * such file is available (tests, demos), this module produces one by
 * fitting the transform network to an analytic, shift-equivariant local
 * style (channel rotation plus edge boost) on seeded procedural images.
 *
 * The fit uses two terms:
 *  - stock term: decode(encode(x)) must match the analytic style of x;
 *  - decoder-resampling term: decoding translated features must match the
 *    equally translated decoded image. Trained stylizers acquire this
 *    property from natural-image statistics; the random initialization
 *    lacks it, and feature-space blending depends on it.
 *
 * Everything is seeded; the same options always produce the same weights.
 */

import { Adam, Buf, makeBuf } from './nn';
import { TransformNet } from './net';
import { Rng } from './rng';
import { backwardWarp } from './warp';

export interface PretrainOptions {
  seed?: number;
  steps?: number;
  /** Side length of the square training images (must be divisible by 8). */
  imageSize?: number;
  learningRate?: number;
  /** Encoder/decoder split index forwarded to the network. */
  split?: number;
  /** Weight of the decoder-resampling term relative to the stock term. */
  resampleWeight?: number;
  /** Max feature-cell translation magnitude used by the resampling term. */
  offsetRange?: number;
  /**
   * Weight of the end-to-end shift-equivariance term: the full network's
   * output for a sub-stride-shifted input is pulled toward the equally
   * shifted output. Zero disables the term. The default balances two
   * opposing needs: enough equivariance that resampled stylizations stay
   * perceptually interchangeable with direct ones, but not so much that
   * independently stylized views become consistent on their own.
   */
  equivarianceWeight?: number;
  /** Progress callback, called every `steps / 4` steps. */
  onProgress?: (step: number, loss: number) => void;
}

/** Analytic local style: channel rotation, brightness lift, edge boost. */
export function analyticStyle(x: Buf): Buf {
  const out = makeBuf(x.h, x.w, 3);
  const blur = makeBuf(x.h, x.w, 3);
  for (let y = 0; y < x.h; y++) {
    for (let xx = 0; xx < x.w; xx++) {
      for (let c = 0; c < 3; c++) {
        let s = 0;
        let n = 0;
        for (let dy = -1; dy <= 1; dy++) {
          for (let dx = -1; dx <= 1; dx++) {
            const yy = y + dy;
            const xx2 = xx + dx;
            if (yy >= 0 && yy < x.h && xx2 >= 0 && xx2 < x.w) {
              s += x.data[(yy * x.w + xx2) * 3 + c];
              n++;
            }
          }
        }
        blur.data[(y * x.w + xx) * 3 + c] = s / n;
      }
    }
  }
  const rot = [
    [0.2, 0.5, 0.3],
    [0.6, 0.1, 0.3],
    [0.3, 0.3, 0.4],
  ];
  for (let p = 0; p < x.h * x.w; p++) {
    for (let c = 0; c < 3; c++) {
      let v = 0.1;
      for (let c2 = 0; c2 < 3; c2++) v += rot[c][c2] * x.data[p * 3 + c2];
      v += 0.8 * (x.data[p * 3 + c] - blur.data[p * 3 + c]);
      out.data[p * 3 + c] = Math.min(1, Math.max(0, v));
    }
  }
  return out;
}

/** Seeded training image: smooth low-frequency field plus per-pixel noise. */
export function proceduralTrainingImage(rng: Rng, size: number): Buf {
  const out = makeBuf(size, size, 3);
  const low = makeBuf(size / 8, size / 8, 3);
  for (let i = 0; i < low.data.length; i++) low.data[i] = rng.next();
  for (let y = 0; y < size; y++) {
    for (let x = 0; x < size; x++) {
      const ly = Math.min(low.h - 1.001, y / 8);
      const lx = Math.min(low.w - 1.001, x / 8);
      const y0 = Math.floor(ly);
      const x0 = Math.floor(lx);
      const fy = ly - y0;
      const fx = lx - x0;
      for (let c = 0; c < 3; c++) {
        const top = (1 - fx) * low.data[(y0 * low.w + x0) * 3 + c]
                  + fx * low.data[(y0 * low.w + x0 + 1) * 3 + c];
        const bot = (1 - fx) * low.data[((y0 + 1) * low.w + x0) * 3 + c]
                  + fx * low.data[((y0 + 1) * low.w + x0 + 1) * 3 + c];
        out.data[(y * size + x) * 3 + c] =
          0.5 * ((1 - fy) * top + fy * bot) + 0.5 * rng.next();
      }
    }
  }
  return out;
}

/** Fit the stand-in stylizer; returns the trained network. */
export function pretrainStylizer(options: PretrainOptions = {}): TransformNet {
  const seed = options.seed ?? 0;
  const steps = options.steps ?? 400;
  const size = options.imageSize ?? 64;
  if (size % 8 !== 0) throw new Error(`imageSize must be divisible by 8, got ${size}`);
  const lr = options.learningRate ?? 2e-3;
  const resampleWeight = options.resampleWeight ?? 1;
  const offsetRange = options.offsetRange ?? 1;
  const equivarianceWeight = options.equivarianceWeight ?? 30;

  const net = new TransformNet(seed, options.split);
  const stride = net.encoderStride;
  const adam = new Adam(net.parameters, lr);
  const rng = new Rng(seed);
  const oneDisp = new Float32Array(size * size).fill(1);
  const fSize = size / stride;
  const oneDispF = new Float32Array(fSize * fSize).fill(1);

  for (let step = 0; step < steps; step++) {
    const x = proceduralTrainingImage(rng, size);
    const target = analyticStyle(x);

    // stock term
    const f = net.encode(x);
    const out = net.decode(f);
    const g = makeBuf(out.h, out.w, 3);
    let loss = 0;
    for (let i = 0; i < g.data.length; i++) {
      const d = out.data[i] - target.data[i];
      loss += d * d;
      g.data[i] = (2 * d) / g.data.length;
    }
    net.encodeBackward(net.decodeBackward(g));

    // decoder-resampling term: random sub-cell feature translation
    const sOff = (rng.next() - 0.5) * 2 * offsetRange;
    const tOff = (rng.next() - 0.5) * 2 * offsetRange;
    const fw = backwardWarp(f.data.slice(), f.w, f.h, f.c, oneDispF, sOff, tOff);
    const outTarget = backwardWarp(out.data.slice(), out.w, out.h, 3, oneDisp,
                                   stride * sOff, stride * tOff);
    const out2 = net.decode({ h: f.h, w: f.w, c: f.c, data: fw.data });
    const g2 = makeBuf(out.h, out.w, 3);
    for (let p = 0; p < out2.h * out2.w; p++) {
      if (outTarget.defined[p] === 0) continue;
      for (let c = 0; c < 3; c++) {
        const i = p * 3 + c;
        g2.data[i] = (resampleWeight * 2 * (out2.data[i] - outTarget.data[i])) / g2.data.length;
      }
    }
    net.decodeBackward(g2);

    // end-to-end shift-equivariance term: stylize(shift(x)) vs shift(stylize(x))
    if (equivarianceWeight > 0) {
      const dx = (rng.next() - 0.5) * 2 * stride;
      const dy = (rng.next() - 0.5) * 2 * stride;
      const xs = backwardWarp(x.data.slice(), x.w, x.h, 3, oneDisp, dx, dy);
      const os = net.decode(net.encode({ h: x.h, w: x.w, c: 3, data: xs.data }));
      const osTarget = backwardWarp(out.data.slice(), out.w, out.h, 3, oneDisp, dx, dy);
      // only penalize interior pixels: the shifted input's zero border band
      // contaminates outputs within a receptive-field margin of the edge
      const margin = 16;
      const g3 = makeBuf(out.h, out.w, 3);
      for (let y = margin; y < os.h - margin; y++) {
        for (let xp = margin; xp < os.w - margin; xp++) {
          const p = y * os.w + xp;
          if (osTarget.defined[p] === 0 || xs.defined[p] === 0) continue;
          for (let c = 0; c < 3; c++) {
            const i = p * 3 + c;
            g3.data[i] = (equivarianceWeight * 2 * (os.data[i] - osTarget.data[i])) / g3.data.length;
          }
        }
      }
      net.encodeBackward(net.decodeBackward(g3));
    }
    adam.step();

    if (options.onProgress && step % Math.max(1, Math.floor(steps / 4)) === 0) {
      options.onProgress(step, loss / g.data.length);
    }
  }

  // some initializations collapse into predicting the mean image; that fit
  // is useless as a stylizer, so fail loudly instead of returning it
  const probe = proceduralTrainingImage(new Rng(seed + 1), size);
  const y = net.stylize(probe);
  let mean = 0;
  let sq = 0;
  for (const v of y.data) {
    mean += v;
    sq += v * v;
  }
  mean /= y.data.length;
  const std = Math.sqrt(Math.max(0, sq / y.data.length - mean * mean));
  if (std < 5e-3) {
    throw new Error(
      `pretraining collapsed to a near-constant output (std ${std.toExponential(2)}); ` +
      'try a different seed');
  }
  return net;
}
