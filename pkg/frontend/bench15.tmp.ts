import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
for (const split of [5, 4, 3]) {
  const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, split });
  const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0, split });
  console.error(`split ${split}: naive ${naive.aggregateDisparitySum.toFixed(1)}`,
                `bpff ${bp.aggregateDisparitySum.toFixed(1)}`,
                `ratio ${(naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2)}`);
}
