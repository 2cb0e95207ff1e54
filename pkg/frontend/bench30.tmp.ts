import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);
const w = 'test/.fixtures/standin-weights.json';
for (const v of ['Naive', 'WarpBlend', 'BPNoFuse', 'BPFuseFeatures', 'BPFuseImg',
                 'OptNoFuse', 'OptFuseFeatures', 'OptFuseImg'] as const) {
  const t0 = Date.now();
  const r = stylizeLightField(lf, geom, { variant: v, seed: 0, styleWeightsPath: w });
  console.error(v.padEnd(16), 'disp', r.aggregateDisparitySum.toFixed(3).padStart(9),
                'perc', r.aggregatePerceptual.toFixed(6),
                's', ((Date.now() - t0) / 1000).toFixed(0));
}
