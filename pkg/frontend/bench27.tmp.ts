import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';
import { pretrainStylizer } from './src/pretrain';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const configs: [string, object][] = [
  ['steps800       ', { steps: 800 }],
  ['rw2            ', { resampleWeight: 2 }],
  ['steps800+rw2   ', { steps: 800, resampleWeight: 2 }],
];
for (const [tag, cfg] of configs) {
  const net = pretrainStylizer(cfg as any);
  const w = `/tmp/w_${tag.trim()}.json`;
  net.saveWeights(w);
  const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, styleWeightsPath: w });
  const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0, styleWeightsPath: w });
  console.error(tag, 'naive', naive.aggregateDisparitySum.toFixed(1),
                'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
                'perc delta %',
                (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4));
}
