import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const naive = stylizeLightField(lf, geom,
  { variant: 'Naive', seed: 0, styleWeightsPath: '/tmp/standin.json' });
for (const w of [0.01, 0.1, 1]) {
  const bp = stylizeLightField(lf, geom, {
    variant: 'BPFuseFeatures', seed: 0, styleWeightsPath: '/tmp/standin.json',
    lossMode: 'both', perceptualWeight: w,
  });
  console.error('pw', w, 'ratio',
                (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
                'perc delta %',
                (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4));
}
