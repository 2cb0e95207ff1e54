import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('test/.fixtures/desk/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/desk/geom', lf);
const w = 'test/.fixtures/standin-weights.json';
const schedule = { learningRate: 3e-3, maxEpochs: 150, firstViewMultiplier: 2 };
const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, styleWeightsPath: w, schedule });
const t0 = Date.now();
const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0, styleWeightsPath: w, schedule });
console.error('desk lr3e-3 e150: naive', naive.aggregateDisparitySum.toFixed(1),
              'bpff', bp.aggregateDisparitySum.toFixed(2),
              'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
              'perc delta %',
              (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4),
              'bp s', ((Date.now() - t0) / 1000).toFixed(0));
