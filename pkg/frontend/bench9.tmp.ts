import { loadLightField, loadGeometry, viewKey } from './src/field';
import { stylizeLightField } from './src/stylize';
import { perceptualLoss, proceduralStyleImage } from './src/perceptual';
import { Buf } from './src/nn';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const style = proceduralStyleImage(64, 64);
const toBuf = (img: { width: number; height: number; data: Float32Array }): Buf =>
  ({ h: img.height, w: img.width, c: 3, data: img.data });

for (const variant of ['Naive', 'WarpBlend']) {
  const r = stylizeLightField(lf, geom, { variant, seed: 0 });
  let c = 0, s = 0, n = 0;
  for (const [key, img] of r.stylized) {
    if (key === '0,0') continue;
    const view = lf.views.get(key)!;
    const p = perceptualLoss(toBuf(img), toBuf(view), style);
    c += p.content; s += p.style; n++;
  }
  console.error(variant.padEnd(10), 'content', (c / n).toExponential(4),
                'style', (s / n).toExponential(4));
}
