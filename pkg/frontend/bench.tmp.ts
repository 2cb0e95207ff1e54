import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
for (const variant of ['Naive', 'NaiveFuse', 'WarpBlend', 'BPNoFuse', 'BPFuseFeatures', 'BPFuseImg', 'OptNoFuse', 'OptFuseFeatures', 'OptFuseImg']) {
  const t0 = Date.now();
  const r = stylizeLightField(lf, geom, { variant, seed: 0,
    schedule: { learningRate: 1e-2, maxEpochs: 20, firstViewMultiplier: 2 } });
  console.error(variant.padEnd(16), 'disp', r.aggregateDisparitySum.toPrecision(5).padStart(10),
                'perc', r.aggregatePerceptual.toPrecision(5),
                's', ((Date.now() - t0) / 1000).toFixed(1));
}
