import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';
import { pretrainStylizer } from './src/pretrain';

const lf = loadLightField('test/.fixtures/desk/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/desk/geom', lf);
const configs: [string, object][] = [
  ['ew10      ', { equivarianceWeight: 10 }],
  ['ew30      ', { equivarianceWeight: 30 }],
  ['ew10 s800 ', { equivarianceWeight: 10, steps: 800 }],
];
for (const [tag, cfg] of configs) {
  const net = pretrainStylizer(cfg as any);
  const w = `/tmp/w_${tag.trim().replace(/ /g, '_')}.json`;
  net.saveWeights(w);
  const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, styleWeightsPath: w });
  const wb = stylizeLightField(lf, geom, { variant: 'WarpBlend', seed: 0, styleWeightsPath: w });
  console.error(tag,
    'naive disp', naive.aggregateDisparitySum.toFixed(1),
    'WB disp', wb.aggregateDisparitySum.toFixed(2),
    'WB delta %',
    (100 * Math.abs(wb.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4));
}
