import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0 });
for (const v of bp.views) {
  console.error(`view ${v.s},${v.t} epochs ${v.epochCount} diverged ${v.diverged} dispSum ${v.disparityLoss.toExponential(3)}`);
}
