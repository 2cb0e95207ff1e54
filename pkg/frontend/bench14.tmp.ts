import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('/tmp/smooth/lf/manifest.json');
const geom = loadGeometry('/tmp/smooth/geom', lf);
const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0 });
const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0 });
console.error('naive disp', naive.aggregateDisparitySum.toExponential(3),
              'perc', naive.aggregatePerceptual.toExponential(5));
console.error('bpff  disp', bp.aggregateDisparitySum.toExponential(3),
              'perc', bp.aggregatePerceptual.toExponential(5));
console.error('ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
              'perc delta %',
              (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4));
