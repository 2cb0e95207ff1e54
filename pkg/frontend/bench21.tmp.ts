import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';
import { sharedExtractor, gramMatrix, proceduralStyleImage } from './src/perceptual';
import { Buf, makeBuf } from './src/nn';

// high-contrast candidate style: saturated stripes/checker, decorrelated channels
function stripeStyle(w: number, h: number): Buf {
  const out = makeBuf(h, w, 3);
  for (let y = 0; y < h; y++) for (let x = 0; x < w; x++) {
    const i = (y * w + x) * 3;
    out.data[i] = (x >> 2) & 1;
    out.data[i + 1] = (y >> 2) & 1 ? 1 : 0.05;
    out.data[i + 2] = ((x + y) >> 3) & 1 ? 0.95 : 0;
  }
  return out;
}

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const opts = { variant: 'Naive', seed: 0, styleWeightsPath: '/tmp/pretrained2.json' };
const naive = stylizeLightField(lf, geom, opts);
const bp = stylizeLightField(lf, geom, { ...opts, variant: 'BPFuseFeatures' });

const ex = sharedExtractor();
const styles: [string, Buf][] = [
  ['procedural', proceduralStyleImage(64, 64) as unknown as Buf],
  ['stripes    ', stripeStyle(64, 64)],
];
for (const [tag, style] of styles) {
  const styleG = ex.features(style).map(gramMatrix);
  const measure = (r: any) => {
    let content = 0, styleL = 0, n = 0;
    for (const [key, img] of r.stylized) {
      if (key === '0,0') continue;
      const view = lf.views.get(key)!;
      const fo = ex.features({ h: img.height, w: img.width, c: 3, data: img.data });
      const fv = ex.features({ h: view.height, w: view.width, c: 3, data: view.data });
      const deep = fo.length - 1;
      let c = 0;
      for (let i = 0; i < fo[deep].data.length; i++) {
        const d = fo[deep].data[i] - fv[deep].data[i]; c += d * d;
      }
      content += c / fo[deep].data.length;
      for (let l = 0; l < fo.length; l++) {
        const g = gramMatrix(fo[l]);
        const gs = styleG[l];
        let s = 0;
        for (let i = 0; i < g.length; i++) { const d = g[i] - gs[i]; s += d * d; }
        styleL += s / g.length;
      }
      n++;
    }
    return { content: content / n, style: styleL / n };
  };
  const a = measure(naive), b = measure(bp);
  console.error(tag, 'naive c', a.content.toExponential(3), 's', a.style.toExponential(3),
                '| content delta %', (100 * Math.abs(a.content - b.content) / a.content).toFixed(3),
                'style delta %', (100 * Math.abs(a.style - b.style) / a.style).toFixed(4));
}
