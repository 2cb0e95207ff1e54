import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';
import { pretrainStylizer } from './src/pretrain';

const net = pretrainStylizer({ onProgress: (s, l) => console.error('step', s, l.toExponential(3)) });
net.saveWeights('/tmp/standin.json');
const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const opts = { variant: 'Naive', seed: 0, styleWeightsPath: '/tmp/standin.json' };
const naive = stylizeLightField(lf, geom, opts);
const bp = stylizeLightField(lf, geom, { ...opts, variant: 'BPFuseFeatures' });
console.error('naive', naive.aggregateDisparitySum.toFixed(1),
              'bpff', bp.aggregateDisparitySum.toFixed(1),
              'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
              'perc delta %',
              (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4));
