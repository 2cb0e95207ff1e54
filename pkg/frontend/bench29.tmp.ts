import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('test/.fixtures/desk/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/desk/geom', lf);
const w = 'test/.fixtures/standin-weights.json';
const t0 = Date.now();
const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, styleWeightsPath: w });
console.error('naive done', ((Date.now() - t0) / 1000).toFixed(0), 's');
const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0, styleWeightsPath: w });
console.error('desk naive', naive.aggregateDisparitySum.toFixed(2),
              'bpff', bp.aggregateDisparitySum.toFixed(2),
              'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
              'perc naive', naive.aggregatePerceptual.toFixed(6),
              'perc bpff', bp.aggregatePerceptual.toFixed(6),
              'perc delta %',
              (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4),
              'total', ((Date.now() - t0) / 1000).toFixed(0), 's');
