import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';
import { pretrainStylizer } from './src/pretrain';
import * as fs from 'fs';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
function evalW(tag: string, w: string) {
  const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, styleWeightsPath: w });
  const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0, styleWeightsPath: w });
  console.error(tag, 'naive', naive.aggregateDisparitySum.toFixed(1),
                'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
                'perc delta %',
                (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4));
}
evalW('rw2            ', '/tmp/w_rw2.json');
const configs: [string, object][] = [
  ['rw4            ', { resampleWeight: 4 }],
  ['steps800+rw2   ', { steps: 800, resampleWeight: 2 }],
];
for (const [tag, cfg] of configs) {
  const w = `/tmp/w_${tag.trim().replace('+','_')}.json`;
  if (!fs.existsSync(w)) {
    const net = pretrainStylizer(cfg as any);
    net.saveWeights(w);
  }
  evalW(tag, w);
}
