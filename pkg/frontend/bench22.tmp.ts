import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('test/.fixtures/desk/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/desk/geom', lf);
const opts = { variant: 'Naive', seed: 0, styleWeightsPath: '/tmp/pretrained2.json', styleWeight: 1 };
const t0 = Date.now();
const naive = stylizeLightField(lf, geom, opts);
console.error('naive done', ((Date.now() - t0) / 1000).toFixed(0), 's');
const bp = stylizeLightField(lf, geom, { ...opts, variant: 'BPFuseFeatures' });
console.error('naive', naive.aggregateDisparitySum.toFixed(1),
              'bpff', bp.aggregateDisparitySum.toFixed(1),
              'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
              'perc delta %',
              (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4),
              'total sec', ((Date.now() - t0) / 1000).toFixed(0));
