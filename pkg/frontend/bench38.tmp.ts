import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';

const schedule = { learningRate: 3e-3, maxEpochs: 150, firstViewMultiplier: 2 };
const w = '/tmp/w_ew10.json';
for (const name of ['desk', 'small']) {
  const lf = loadLightField(`test/.fixtures/${name}/lf/manifest.json`);
  const geom = loadGeometry(`test/.fixtures/${name}/geom`, lf);
  const naive = stylizeLightField(lf, geom, { variant: 'Naive', seed: 0, styleWeightsPath: w, schedule });
  const t0 = Date.now();
  const bp = stylizeLightField(lf, geom, { variant: 'BPFuseFeatures', seed: 0, styleWeightsPath: w, schedule });
  console.error(name, 'naive', naive.aggregateDisparitySum.toFixed(1),
                'bpff', bp.aggregateDisparitySum.toFixed(2),
                'ratio', (naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2),
                'perc delta %',
                (100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(4),
                'bp s', ((Date.now() - t0) / 1000).toFixed(0));
}
