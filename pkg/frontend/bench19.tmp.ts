import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';
import { TransformNet } from './src/net';
import { Adam, Buf, makeBuf } from './src/nn';
import { Rng } from './src/rng';

// analytic local "style": channel rotation + edge boost, shift-equivariant
function styleTarget(x: Buf): Buf {
  const out = makeBuf(x.h, x.w, 3);
  const blur = makeBuf(x.h, x.w, 3);
  for (let y = 0; y < x.h; y++) for (let xx = 0; xx < x.w; xx++) {
    for (let c = 0; c < 3; c++) {
      let s = 0, n = 0;
      for (let dy = -1; dy <= 1; dy++) for (let dx = -1; dx <= 1; dx++) {
        const yy = y + dy, xx2 = xx + dx;
        if (yy >= 0 && yy < x.h && xx2 >= 0 && xx2 < x.w) { s += x.data[(yy * x.w + xx2) * 3 + c]; n++; }
      }
      blur.data[(y * x.w + xx) * 3 + c] = s / n;
    }
  }
  const rot = [[0.2, 0.5, 0.3], [0.6, 0.1, 0.3], [0.3, 0.3, 0.4]];
  for (let p = 0; p < x.h * x.w; p++) {
    for (let c = 0; c < 3; c++) {
      let v = 0.1;
      for (let c2 = 0; c2 < 3; c2++) v += rot[c][c2] * x.data[p * 3 + c2];
      v += 0.8 * (x.data[p * 3 + c] - blur.data[p * 3 + c]); // edge boost
      out.data[p * 3 + c] = Math.min(1, Math.max(0, v));
    }
  }
  return out;
}

function randomImage(rng: Rng, size: number): Buf {
  // half smooth (random low-res upsampled), half textured
  const out = makeBuf(size, size, 3);
  const low = makeBuf(size / 8, size / 8, 3);
  for (let i = 0; i < low.data.length; i++) low.data[i] = rng.next();
  for (let y = 0; y < size; y++) for (let x = 0; x < size; x++) {
    const ly = Math.min(low.h - 1.001, y / 8), lx = Math.min(low.w - 1.001, x / 8);
    const y0 = Math.floor(ly), x0 = Math.floor(lx), fy = ly - y0, fx = lx - x0;
    for (let c = 0; c < 3; c++) {
      const v = (1 - fy) * ((1 - fx) * low.data[(y0 * low.w + x0) * 3 + c] + fx * low.data[(y0 * low.w + x0 + 1) * 3 + c])
              + fy * ((1 - fx) * low.data[((y0 + 1) * low.w + x0) * 3 + c] + fx * low.data[((y0 + 1) * low.w + x0 + 1) * 3 + c]);
      out.data[(y * size + x) * 3 + c] = 0.5 * v + 0.5 * rng.next();
    }
  }
  return out;
}

const net = new TransformNet(0);
const adam = new Adam(net.parameters, 2e-3);
const rng = new Rng(42);
const t0 = Date.now();
for (let step = 0; step < 400; step++) {
  const x = randomImage(rng, 64);
  const target = styleTarget(x);
  const out = net.decode(net.encode(x));
  const g = makeBuf(out.h, out.w, 3);
  let loss = 0;
  for (let i = 0; i < g.data.length; i++) {
    const d = out.data[i] - target.data[i];
    loss += d * d;
    g.data[i] = 2 * d / g.data.length;
  }
  net.encodeBackward(net.decodeBackward(g));
  adam.step();
  if (step % 100 === 0) console.error('pretrain step', step, 'mse', (loss / g.data.length).toExponential(3));
}
console.error('pretrain took', ((Date.now() - t0) / 1000).toFixed(1), 's');
net.saveWeights('/tmp/pretrained.json');

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const opts = { variant: 'Naive', seed: 0, styleWeightsPath: '/tmp/pretrained.json' };
const naive = stylizeLightField(lf, geom, opts);
const nf = stylizeLightField(lf, geom, { ...opts, variant: 'NaiveFuse' });
const bp = stylizeLightField(lf, geom, { ...opts, variant: 'BPFuseFeatures' });
console.error('naive', naive.aggregateDisparitySum.toFixed(1),
              'naivefuse', nf.aggregateDisparitySum.toFixed(1),
              'bpff', bp.aggregateDisparitySum.toFixed(1),
              'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
              'perc delta %',
              (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(3));
