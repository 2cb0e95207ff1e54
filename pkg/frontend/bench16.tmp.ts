import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

for (const [tag, lfPath, gPath] of [
  ['noise ', 'test/.fixtures/small/lf/manifest.json', 'test/.fixtures/small/geom'],
  ['smooth', '/tmp/smooth/lf/manifest.json', '/tmp/smooth/geom'],
] as const) {
  const lf = loadLightField(lfPath);
  const geom = loadGeometry(gPath, lf);
  const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0 });
  const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0 });
  console.error(tag, 'naive', naive.aggregateDisparitySum.toFixed(1),
                'bpff', bp.aggregateDisparitySum.toFixed(1),
                'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
                'perc delta %',
                (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(3));
}
