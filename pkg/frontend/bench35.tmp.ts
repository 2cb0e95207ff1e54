import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('test/.fixtures/desk/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/desk/geom', lf);
for (const w of ['test/.fixtures/standin-weights.json', '/tmp/w_or2.json', '/tmp/w_or2_rw2.json']) {
  const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, styleWeightsPath: w });
  const wb = stylizeLightField(lf, geom, { variant: 'WarpBlend', seed: 0, styleWeightsPath: w });
  console.error(w, 'WB delta %',
    (100 * Math.abs(wb.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4),
    'naive disp', naive.aggregateDisparitySum.toFixed(1),
    'WB disp', wb.aggregateDisparitySum.toFixed(2));
}
