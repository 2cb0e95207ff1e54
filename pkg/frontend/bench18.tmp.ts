import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

for (const tag of ['b1_f2', 'b1_f3', 'b1_f5', 'b1_f6', 'b2_f3', 'b2_f5', 'b2_f6']) {
  const lf = loadLightField(`/tmp/scan_${tag}/lf/manifest.json`);
  const geom = loadGeometry(`/tmp/scan_${tag}/geom`, lf);
  const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0 });
  const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0 });
  console.error(tag, 'naive', naive.aggregateDisparitySum.toFixed(1),
                'bpff', bp.aggregateDisparitySum.toFixed(1),
                'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2));
}
