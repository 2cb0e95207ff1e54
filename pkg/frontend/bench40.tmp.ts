import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';
import { pretrainStylizer } from './src/pretrain';

const net = pretrainStylizer({ equivarianceWeight: 50 });
net.saveWeights('/tmp/w_ew50.json');
const schedule = { learningRate: 3e-3, maxEpochs: 150, firstViewMultiplier: 2 };
const w = '/tmp/w_ew50.json';
const lf = loadLightField('test/.fixtures/desk/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/desk/geom', lf);
const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, styleWeightsPath: w, schedule });
const wb = stylizeLightField(lf, geom, { variant: 'WarpBlend', seed: 0, styleWeightsPath: w, schedule });
console.error('ew50 floor: naive', naive.aggregateDisparitySum.toFixed(1),
              'WB delta %',
              (100 * Math.abs(wb.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4));
const t0 = Date.now();
const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0, styleWeightsPath: w, schedule });
console.error('desk ew50: ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
              'bpff', bp.aggregateDisparitySum.toFixed(2),
              'perc delta %',
              (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4),
              'bp s', ((Date.now() - t0) / 1000).toFixed(0));
