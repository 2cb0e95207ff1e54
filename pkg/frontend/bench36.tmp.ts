import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';
import { pretrainStylizer } from './src/pretrain';

const lf = loadLightField('test/.fixtures/desk/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/desk/geom', lf);
for (const ew of [0.3, 1, 3]) {
  const net = pretrainStylizer({ equivarianceWeight: ew });
  const w = `/tmp/w_ew${ew}.json`;
  net.saveWeights(w);
  const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, styleWeightsPath: w });
  const wb = stylizeLightField(lf, geom, { variant: 'WarpBlend', seed: 0, styleWeightsPath: w });
  console.error('ew', ew,
    'naive disp', naive.aggregateDisparitySum.toFixed(1),
    'WB disp', wb.aggregateDisparitySum.toFixed(2),
    'WB delta %',
    (100 * Math.abs(wb.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4));
}
