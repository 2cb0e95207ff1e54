/**
 * Iterative per-view stylization of a light field.
 *
 * The central view is stylized once and frozen; every other view is visited
 * in boustrophedonic order and the transform network is optimized against
 * the masked difference between its output and the warped frozen central,
 * with the updated network carried to the next view. Warped-central
 * constants (image or feature scale) are precomputed per view since the
 * central artifacts and geometry never change during a run.
 */

import { Image } from './png';
import { LightField, ViewGeometry, ViewIndex, viewKey } from './field';
import { backwardWarp, mapsToFeatureScale } from './warp';
import { TransformNet } from './net';
import { Adam, Buf, makeBuf, makeParam, zeroGrads } from './nn';
import { OptimizerSchedule, DEFAULT_SCHEDULE, traversalOrder } from './schedule';
import { perceptualLoss, perceptualGrad, proceduralStyleImage,
         DEFAULT_STYLE_WEIGHT } from './perceptual';

export type Fusion = 'features' | 'images' | 'none';
export type Optimization = 'bp' | 'pixels' | 'none';

export interface VariantSpec {
  fusion: Fusion;
  optimization: Optimization;
}

/** The 3x3 fusion-by-optimization grid; Naive is (none, none). */
export const VARIANTS: Record<string, VariantSpec> = {
  BPFuseFeatures: { fusion: 'features', optimization: 'bp' },
  BPFuseImg: { fusion: 'images', optimization: 'bp' },
  BPNoFuse: { fusion: 'none', optimization: 'bp' },
  OptFuseFeatures: { fusion: 'features', optimization: 'pixels' },
  OptFuseImg: { fusion: 'images', optimization: 'pixels' },
  OptNoFuse: { fusion: 'none', optimization: 'pixels' },
  NaiveFuse: { fusion: 'features', optimization: 'none' },
  WarpBlend: { fusion: 'images', optimization: 'none' },
  Naive: { fusion: 'none', optimization: 'none' },
};

export type LossMode = 'disp' | 'both';
export type LossTarget = 'stylized-central' | 'raw-central';

export interface RunOptions {
  variant: string;
  schedule?: OptimizerSchedule;
  lossMode?: LossMode;
  /**
   * Warp source of the consistency target. 'stylized-central' (default)
   * warps the frozen stylized central view; 'raw-central' warps the
   * unstylized central view instead.
   */
  lossTarget?: LossTarget;
  seed?: number;
  split?: number;
  /** JSON weight file; omitted = seeded deterministic initialization. */
  styleWeightsPath?: string;
  /** Weight of the perceptual term when lossMode is 'both'. */
  perceptualWeight?: number;
  styleWeight?: number;
}

export interface ViewResult {
  s: number;
  t: number;
  epochCount: number;
  /** Sum over masked pixels and channels of squared masked residual. */
  disparityLoss: number;
  /** disparityLoss / (masked pixel count * channels). */
  disparityLossMean: number;
  perceptualLoss: number;
  seconds: number;
  diverged: boolean;
}

export interface RunResult {
  variant: string;
  views: ViewResult[];
  stylized: Map<string, Image>;
  /** Sum of per-view disparity loss sums over non-central views. */
  aggregateDisparitySum: number;
  aggregateDisparityMean: number;
  aggregatePerceptual: number;
  totalSeconds: number;
  /** Frozen central artifacts captured before the first optimized view. */
  centralImageBefore: Float32Array;
  centralFeaturesBefore: Float32Array;
  /** The same stored buffers read back after the full run. */
  centralImageAfter: Float32Array;
  centralFeaturesAfter: Float32Array;
  net: TransformNet;
}

export function runVariantSpec(name: string): VariantSpec {
  const spec = VARIANTS[name];
  if (!spec) {
    throw new Error(`unknown variant ${name}; expected one of ${Object.keys(VARIANTS).join(', ')}`);
  }
  return spec;
}

const imgToBuf = (img: Image): Buf =>
  ({ h: img.height, w: img.width, c: 3, data: img.data.slice() });

/** Feature fusion: M (.) warped-central + (1 - M) (.) F, per pixel. */
export function fuseFeatures(f: Buf, warpedCentral: Float32Array,
                             mask: Float32Array): Buf {
  const out = makeBuf(f.h, f.w, f.c);
  for (let p = 0; p < f.h * f.w; p++) {
    const m = mask[p];
    const base = p * f.c;
    for (let c = 0; c < f.c; c++) {
      out.data[base + c] = m * warpedCentral[base + c] + (1 - m) * f.data[base + c];
    }
  }
  return out;
}

interface ViewConstants {
  view: Buf;
  /** Image-scale warp of the loss target source; zero where undefined. */
  target: Float32Array;
  /** Image-scale confidence, zeroed where the warp is undefined. */
  mask: Float32Array;
  maskedCount: number;
  /** Image-scale warp of the stylized central, for image fusion. */
  blendSource: Float32Array;
  blendMask: Float32Array;
  /** Feature-scale warp of the frozen central features, for fusion. */
  warpedFeatures: Float32Array | null;
  featureMask: Float32Array | null;
}

function effectiveMask(mask: Float32Array, defined: Float32Array):
    { mask: Float32Array; count: number } {
  const m = new Float32Array(mask.length);
  let count = 0;
  for (let i = 0; i < mask.length; i++) {
    m[i] = defined[i] > 0 ? mask[i] : 0;
    if (m[i] > 0) count++;
  }
  return { mask: m, count };
}

function buildConstants(
  lf: LightField, idx: ViewIndex, geom: ViewGeometry, fusion: Fusion,
  lossTarget: LossTarget, central: Image, stylizedCentral: Float32Array,
  centralFeatures: Buf,
): ViewConstants {
  const { width, height } = lf;
  const disp = geom.disparity.data;

  const stylWarp = backwardWarp(stylizedCentral, width, height, 3, disp, idx.s, idx.t);
  const blend = effectiveMask(geom.mask.data, stylWarp.defined);

  let target = stylWarp.data;
  let mask = blend;
  if (lossTarget === 'raw-central') {
    const rawWarp = backwardWarp(central.data, width, height, 3, disp, idx.s, idx.t);
    target = rawWarp.data;
    mask = effectiveMask(geom.mask.data, rawWarp.defined);
  }

  let warpedFeatures: Float32Array | null = null;
  let featureMask: Float32Array | null = null;
  if (fusion === 'features') {
    const { h: fh, w: fw, c: fc } = centralFeatures;
    const maps = mapsToFeatureScale(disp, geom.mask.data, width, height, fw, fh);
    const fWarp = backwardWarp(centralFeatures.data, fw, fh, fc,
                               maps.disparity, idx.s, idx.t);
    warpedFeatures = fWarp.data;
    featureMask = effectiveMask(maps.mask, fWarp.defined).mask;
  }

  return {
    view: imgToBuf(lf.views.get(viewKey(idx.s, idx.t))!),
    target, mask: mask.mask, maskedCount: mask.count,
    blendSource: stylWarp.data, blendMask: blend.mask,
    warpedFeatures, featureMask,
  };
}

/** Masked squared-error sum: sum((m * (out - target))^2) over channels. */
function disparityLossSum(out: Float32Array, c: ViewConstants): number {
  let s = 0;
  for (let p = 0; p < c.mask.length; p++) {
    const m = c.mask[p];
    if (m === 0) continue;
    const base = p * 3;
    for (let ch = 0; ch < 3; ch++) {
      const d = m * (out[base + ch] - c.target[base + ch]);
      s += d * d;
    }
  }
  return s;
}

function disparityGrad(out: Float32Array, c: ViewConstants, denom: number): Buf {
  const g = makeBuf(c.view.h, c.view.w, 3);
  const scale = 2 / denom;
  for (let p = 0; p < c.mask.length; p++) {
    const m = c.mask[p];
    if (m === 0) continue;
    const base = p * 3;
    for (let ch = 0; ch < 3; ch++) {
      g.data[base + ch] = scale * m * m * (out[base + ch] - c.target[base + ch]);
    }
  }
  return g;
}

function blendImages(base: Buf, c: ViewConstants): Buf {
  const out = makeBuf(base.h, base.w, 3);
  for (let p = 0; p < c.blendMask.length; p++) {
    const m = c.blendMask[p];
    const i = p * 3;
    for (let ch = 0; ch < 3; ch++) {
      out.data[i + ch] = m * c.blendSource[i + ch] + (1 - m) * base.data[i + ch];
    }
  }
  return out;
}

export function stylizeLightField(
  lf: LightField, geometry: Map<string, ViewGeometry>, options: RunOptions,
): RunResult {
  const spec = runVariantSpec(options.variant);
  const schedule = options.schedule ?? DEFAULT_SCHEDULE;
  const lossMode = options.lossMode ?? 'disp';
  const lossTarget = options.lossTarget ?? 'stylized-central';
  const seed = options.seed ?? 0;
  const perceptualWeight = options.perceptualWeight ?? 1e-4;
  const styleWeight = options.styleWeight ?? DEFAULT_STYLE_WEIGHT;
  const t0 = Date.now();

  const net = new TransformNet(seed, options.split);
  if (options.styleWeightsPath) net.loadWeights(options.styleWeightsPath);

  const central = lf.views.get(viewKey(0, 0))!;
  const centralBuf = imgToBuf(central);
  const centralFeatures = { ...net.encode(centralBuf) };
  centralFeatures.data = centralFeatures.data.slice();
  const stylizedCentral = net.decode(centralFeatures).data.slice();
  const centralImageBefore = stylizedCentral.slice();
  const centralFeaturesBefore = centralFeatures.data.slice();

  const styleImage = proceduralStyleImage(lf.width, lf.height);

  const stylized = new Map<string, Image>();
  stylized.set(viewKey(0, 0),
               { width: lf.width, height: lf.height, data: stylizedCentral.slice() });
  const views: ViewResult[] = [{
    s: 0, t: 0, epochCount: 0, disparityLoss: 0, disparityLossMean: 0,
    perceptualLoss: perceptualLoss(
      { h: lf.height, w: lf.width, c: 3, data: stylizedCentral },
      centralBuf, styleImage, styleWeight).total,
    seconds: 0, diverged: false,
  }];

  const order = traversalOrder(lf.radiusS, lf.radiusT);
  const adam = spec.optimization === 'bp'
    ? new Adam(net.parameters, schedule.learningRate) : null;
  let firstView = true;

  for (const idx of order) {
    const viewStart = Date.now();
    const geom = geometry.get(viewKey(idx.s, idx.t))!;
    const consts = buildConstants(lf, idx, geom, spec.fusion, lossTarget,
                                  central, stylizedCentral, centralFeatures);
    const denom = Math.max(consts.maskedCount * 3, 1);

    // forward with layer caches retained for a matching backward
    const forward = (): Buf => {
      let out: Buf;
      if (spec.fusion === 'features') {
        out = net.decode(fuseFeatures(net.encode(consts.view),
                                      consts.warpedFeatures!, consts.featureMask!));
      } else {
        out = net.decode(net.encode(consts.view));
      }
      if (spec.fusion === 'images') out = blendImages(out, consts);
      return out;
    };

    const lossOnly = (out: Buf): number => {
      let loss = disparityLossSum(out.data, consts) / denom;
      if (lossMode === 'both') {
        loss += perceptualWeight
          * perceptualLoss(out, consts.view, styleImage, styleWeight).total;
      }
      return loss;
    };

    const lossAndGrad = (out: Buf): { loss: number; grad: Buf } => {
      const grad = disparityGrad(out.data, consts, denom);
      let loss = disparityLossSum(out.data, consts) / denom;
      if (lossMode === 'both') {
        const p = perceptualLoss(out, consts.view, styleImage, styleWeight);
        const pg = perceptualGrad(out, consts.view, styleImage, styleWeight);
        loss += perceptualWeight * p.total;
        for (let i = 0; i < grad.data.length; i++) {
          grad.data[i] += perceptualWeight * pg.data[i];
        }
      }
      return { loss, grad };
    };

    let epochs = 0;
    let diverged = false;
    const maxEpochs = Math.round(
      schedule.maxEpochs * (firstView ? schedule.firstViewMultiplier : 1));
    let out = forward();

    if (spec.optimization !== 'none' && maxEpochs > 0) {
      const pixelParam = spec.optimization === 'pixels'
        ? makeParam([out.h, out.w, out.c], out.data) : null;
      const opt = spec.optimization === 'bp'
        ? adam! : new Adam([pixelParam!], schedule.learningRate);
      // the per-view result is the best checkpoint seen, not the last epoch:
      // the loss oscillates near convergence and a divergence abort would
      // otherwise hand a degraded state to the next view
      let bestLoss = Infinity;
      let bestOut: Float32Array | null = null;
      let bestParams: Float32Array[] | null = null;
      const snapshot = () => {
        bestOut = out.data.slice();
        if (spec.optimization === 'bp') {
          bestParams = net.parameters.map((p) => p.value.slice());
        }
      };
      let prev = Infinity;
      let rises = 0;
      for (let e = 0; e < maxEpochs; e++) {
        const { loss, grad } = lossAndGrad(out);
        if (loss < bestLoss) {
          bestLoss = loss;
          snapshot();
        }
        if (spec.optimization === 'bp') {
          let g = grad;
          if (spec.fusion === 'images') {
            // only the (1 - M) share of the blend reaches the network output
            g = makeBuf(grad.h, grad.w, grad.c);
            for (let p = 0; p < consts.blendMask.length; p++) {
              const m = 1 - consts.blendMask[p];
              for (let ch = 0; ch < 3; ch++) g.data[p * 3 + ch] = m * grad.data[p * 3 + ch];
            }
          }
          let df = net.decodeBackward(g);
          if (spec.fusion === 'features') {
            for (let p = 0; p < consts.featureMask!.length; p++) {
              const m = 1 - consts.featureMask![p];
              const base = p * df.c;
              for (let ch = 0; ch < df.c; ch++) df.data[base + ch] *= m;
            }
          }
          net.encodeBackward(df);
        } else {
          pixelParam!.grad.set(grad.data);
        }
        opt.step();
        epochs++;
        if (spec.optimization === 'pixels') {
          out = { h: out.h, w: out.w, c: out.c, data: pixelParam!.value };
        } else {
          out = forward();
        }
        if (loss > prev * (1 + 1e-6)) {
          // divergence detector: five consecutive rising epochs abort the view
          rises++;
          if (rises >= 5) {
            diverged = true;
            console.warn(`view (${idx.s},${idx.t}): loss rose 5 epochs running ` +
                         `(${prev} -> ${loss}); aborting at epoch ${epochs}`);
            break;
          }
        } else {
          rises = 0;
        }
        prev = loss;
      }
      if (lossOnly(out) > bestLoss && bestOut) {
        out = { h: out.h, w: out.w, c: out.c, data: bestOut };
        if (bestParams) net.parameters.forEach((p, i) => p.value.set(bestParams![i]));
      }
      if (spec.optimization === 'bp') zeroGrads(net.parameters);
    }

    const final = out.data.slice();
    for (let i = 0; i < final.length; i++) {
      final[i] = Math.min(1, Math.max(0, final[i]));
    }
    const dispSum = disparityLossSum(final, consts);
    const perc = perceptualLoss({ h: out.h, w: out.w, c: 3, data: final },
                                consts.view, styleImage, styleWeight).total;
    stylized.set(viewKey(idx.s, idx.t),
                 { width: lf.width, height: lf.height, data: final });
    views.push({
      s: idx.s, t: idx.t, epochCount: epochs,
      disparityLoss: dispSum, disparityLossMean: dispSum / denom,
      perceptualLoss: perc,
      seconds: (Date.now() - viewStart) / 1000, diverged,
    });
    firstView = false;
  }

  const nonCentral = views.filter((v) => v.s !== 0 || v.t !== 0);
  return {
    variant: options.variant,
    views, stylized,
    aggregateDisparitySum: nonCentral.reduce((a, v) => a + v.disparityLoss, 0),
    aggregateDisparityMean:
      nonCentral.reduce((a, v) => a + v.disparityLossMean, 0) / Math.max(nonCentral.length, 1),
    aggregatePerceptual:
      nonCentral.reduce((a, v) => a + v.perceptualLoss, 0) / Math.max(nonCentral.length, 1),
    totalSeconds: (Date.now() - t0) / 1000,
    centralImageBefore,
    centralFeaturesBefore,
    centralImageAfter: stylizedCentral.slice(),
    centralFeaturesAfter: centralFeatures.data.slice(),
    net,
  };
}

export interface LossModeReport {
  dispOnly: { aggregateDisparitySum: number; aggregatePerceptual: number; seconds: number };
  combined: { aggregateDisparitySum: number; aggregatePerceptual: number; seconds: number };
}

/** Run the same variant with disparity-only and combined loss; report both. */
export function compareLossModes(
  lf: LightField, geometry: Map<string, ViewGeometry>,
  options: Omit<RunOptions, 'lossMode'>,
): LossModeReport {
  const summarize = (mode: LossMode) => {
    const t0 = Date.now();
    const r = stylizeLightField(lf, geometry, { ...options, lossMode: mode });
    return {
      aggregateDisparitySum: r.aggregateDisparitySum,
      aggregatePerceptual: r.aggregatePerceptual,
      seconds: (Date.now() - t0) / 1000,
    };
  };
  return { dispOnly: summarize('disp'), combined: summarize('both') };
}
