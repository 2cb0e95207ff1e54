import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const t0 = Date.now();
const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0 });
const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0 });
console.error('naive disp', naive.aggregateDisparitySum.toExponential(4),
              'perc', naive.aggregatePerceptual.toExponential(6));
console.error('bpff  disp', bp.aggregateDisparitySum.toExponential(4),
              'perc', bp.aggregatePerceptual.toExponential(6));
console.error('disp ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
              'perc rel-delta %',
              (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4),
              'sec', ((Date.now() - t0) / 1000).toFixed(1));
