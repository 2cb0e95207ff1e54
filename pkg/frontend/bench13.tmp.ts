import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const show = (tag: string, r: any) =>
  console.error(tag, 'disp', r.aggregateDisparitySum.toFixed(2),
                'perc', r.aggregatePerceptual.toExponential(4));
show('NaiveFuse ', stylizeLightField(lf, geom, { variant: 'NaiveFuse', seed: 0 }));
show('BPFF lr3e-2', stylizeLightField(lf, geom, {
  variant: 'BPFuseFeatures', seed: 0,
  schedule: { learningRate: 3e-2, maxEpochs: 50, firstViewMultiplier: 2 } }));
show('BPFF e200  ', stylizeLightField(lf, geom, {
  variant: 'BPFuseFeatures', seed: 0,
  schedule: { learningRate: 1e-2, maxEpochs: 200, firstViewMultiplier: 2 } }));
