import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';
import { pretrainStylizer } from './src/pretrain';
import * as fs from 'fs';

const lf = loadLightField('test/.fixtures/desk/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/desk/geom', lf);
const configs: [string, object][] = [
  ['or2       ', { offsetRange: 2 }],
  ['or2+rw2   ', { offsetRange: 2, resampleWeight: 2 }],
];
for (const [tag, cfg] of configs) {
  const w = `/tmp/w_${tag.trim().replace('+', '_')}.json`;
  if (!fs.existsSync(w)) {
    const net = pretrainStylizer(cfg as any);
    net.saveWeights(w);
  }
  const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, styleWeightsPath: w });
  const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0, styleWeightsPath: w });
  console.error(tag, 'naive', naive.aggregateDisparitySum.toFixed(1),
                'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
                'perc delta %',
                (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4));
}
