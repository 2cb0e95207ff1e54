import { loadLightField, loadGeometry, viewKey } from './src/field';
import { stylizeLightField, RunResult } from './src/stylize';
import { sharedExtractor } from './src/perceptual';
import { Buf } from './src/nn';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const w = 'test/.fixtures/standin-weights.json';

function pool(f: Buf, k: number): Float32Array {
  const ph = Math.floor(f.h / k), pw = Math.floor(f.w / k);
  const out = new Float32Array(ph * pw * f.c);
  for (let y = 0; y < ph; y++) for (let x = 0; x < pw; x++)
    for (let dy = 0; dy < k; dy++) for (let dx = 0; dx < k; dx++)
      for (let c = 0; c < f.c; c++)
        out[(y * pw + x) * f.c + c] += f.data[(((y * k + dy) * f.w) + (x * k + dx)) * f.c + c] / (k * k);
  return out;
}
const mse = (a: Float32Array, b: Float32Array) => {
  let s = 0; for (let i = 0; i < a.length; i++) { const d = a[i] - b[i]; s += d * d; } return s / a.length;
};
const toBuf = (img: { width: number; height: number; data: Float32Array }): Buf =>
  ({ h: img.height, w: img.width, c: 3, data: img.data });
const ex = sharedExtractor();
function pooledContent(r: RunResult, k: number): number {
  let s = 0, n = 0;
  for (const item of r.views) {
    if (item.s === 0 && item.t === 0) continue;
    const view = toBuf(lf.views.get(viewKey(item.s, item.t))!);
    const deepC = pool(ex.features(view)[2], k);
    const deepS = pool(ex.features(toBuf(r.stylized.get(viewKey(item.s, item.t))!))[2], k);
    s += mse(deepS, deepC); n++;
  }
  return s / n;
}

const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, styleWeightsPath: w });
const n1 = pooledContent(naive, 1), n2 = pooledContent(naive, 2);
const configs: [string, number, number][] = [
  ['base lr1e-2 e50 ', 1e-2, 50],
  ['lr5e-3 e100     ', 5e-3, 100],
  ['lr3e-3 e150     ', 3e-3, 150],
  ['lr1e-3 e400     ', 1e-3, 400],
];
for (const [tag, lr, ep] of configs) {
  const t0 = Date.now();
  const bp = stylizeLightField(lf, geom, {
    variant: 'BPFuseFeatures', seed: 0, styleWeightsPath: w,
    schedule: { learningRate: lr, maxEpochs: ep, firstViewMultiplier: 2 },
  });
  console.error(tag,
    'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
    'd1 %', (100 * Math.abs(pooledContent(bp, 1) - n1) / n1).toFixed(4),
    'd2 %', (100 * Math.abs(pooledContent(bp, 2) - n2) / n2).toFixed(4),
    's', ((Date.now() - t0) / 1000).toFixed(0));
}
