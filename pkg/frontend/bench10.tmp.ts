import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';
import { proceduralStyleImage, gramMatrix } from './src/perceptual';
import { Buf, Conv3x3 } from './src/nn';
import { Rng } from './src/rng';

// 5-layer extractor, strides down to 32
const rng = new Rng(1234);
const chans = [3, 8, 16, 24, 32, 48];
const layers = chans.slice(0, -1).map((c, i) => new Conv3x3(c, chans[i + 1], 2, 'relu', rng));
const feats = (x: Buf): Buf[] => {
  const out: Buf[] = [];
  let y = x;
  for (const l of layers) { y = l.forward(y); out.push(y); }
  return out;
};
const mse = (a: Float32Array, b: Float32Array) => {
  let s = 0;
  for (let i = 0; i < a.length; i++) { const d = a[i] - b[i]; s += d * d; }
  return s / a.length;
};
const toBuf = (img: any): Buf => ({ h: img.height, w: img.width, c: 3, data: img.data });

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const style = proceduralStyleImage(64, 64);
const styleG = feats(style).map(gramMatrix);

const agg: Record<string, number[][]> = {};
for (const variant of ['Naive', 'WarpBlend']) {
  const r = stylizeLightField(lf, geom, { variant, seed: 0 });
  const rows: number[][] = [];
  for (const [key, img] of r.stylized) {
    if (key === '0,0') continue;
    const view = lf.views.get(key)!;
    const fv = feats(toBuf(view)).map((f) => f.data.slice());
    const fo = feats(toBuf(img));
    const row: number[] = [];
    for (let i = 0; i < fo.length; i++) row.push(mse(fo[i].data, fv[i]));
    for (let i = 0; i < fo.length; i++) row.push(mse(gramMatrix(fo[i]), styleG[i]));
    rows.push(row);
  }
  agg[variant] = rows;
}
const mean = (rows: number[][], j: number) => rows.reduce((a, r) => a + r[j], 0) / rows.length;
for (let j = 0; j < 10; j++) {
  const n = mean(agg['Naive'], j), b = mean(agg['WarpBlend'], j);
  const kind = j < 5 ? `content L${j}` : `style   L${j - 5}`;
  console.error(kind, 'naive', n.toExponential(3), 'rel-delta',
                (100 * Math.abs(n - b) / n).toFixed(3) + '%');
}
