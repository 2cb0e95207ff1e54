import { loadLightField, loadGeometry, viewKey } from './src/field';
import { stylizeLightField } from './src/stylize';
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
const KS = [1, 2, 4];
const results: Record<string, number[][]> = {};
for (const v of ['Naive', 'WarpBlend', 'BPFuseFeatures'] as const) {
  const r = stylizeLightField(lf, geom, { variant: v, seed: 0, styleWeightsPath: w });
  const per: number[][] = [];
  for (const item of r.views) {
    if (item.s === 0 && item.t === 0) continue;
    const view = toBuf(lf.views.get(viewKey(item.s, item.t))!);
    const deepC = ex.features(view)[2];
    const cPooled = KS.map((k) => pool(deepC, k));
    const deepS = ex.features(toBuf(r.stylized.get(viewKey(item.s, item.t))!))[2];
    per.push(KS.map((k, i) => mse(pool(deepS, k), cPooled[i])));
  }
  results[v] = per;
}
for (let k = 0; k < KS.length; k++) {
  const avg = (v: string) => results[v].reduce((s, r) => s + r[k], 0) / results[v].length;
  const n = avg('Naive');
  console.error('pool', KS[k],
    'naive', n.toFixed(6),
    'WB delta %', (100 * Math.abs(avg('WarpBlend') - n) / n).toFixed(4),
    'BPFF delta %', (100 * Math.abs(avg('BPFuseFeatures') - n) / n).toFixed(4));
}
