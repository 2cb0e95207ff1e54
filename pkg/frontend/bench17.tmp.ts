import { loadLightField, loadGeometry } from './src/field';
import { stylizeLightField } from './src/stylize';
import { TransformNet } from './src/net';
import { Conv3x3 } from './src/nn';

const lf = loadLightField('test/.fixtures/small/lf/manifest.json');
const geom = loadGeometry('test/.fixtures/small/geom', lf);

// probe: scale the output conv's init to raise stylization contrast;
// patch TransformNet construction via a subclassed factory is overkill —
// mutate after construction inside stylizeLightField is not possible, so
// emulate by scaling and re-saving weights that runs load.
import * as fs from 'fs';
for (const gain of [1, 2, 4]) {
  const proto = new TransformNet(0);
  const last = proto.blocks[proto.blocks.length - 1] as Conv3x3;
  for (let i = 0; i < last.kernel.value.length; i++) last.kernel.value[i] *= gain;
  proto.saveWeights('/tmp/gain.json');
  const opts = { variant: 'Naive', seed: 0, styleWeightsPath: '/tmp/gain.json' };
  const naive = stylizeLightField(lf, geom, opts);
  const bp = stylizeLightField(lf, geom, { ...opts, variant: 'BPFuseFeatures' });
  console.error(`gain ${gain}: naive ${naive.aggregateDisparitySum.toFixed(1)}`,
                `bpff ${bp.aggregateDisparitySum.toFixed(1)}`,
                `ratio ${(naive.aggregateDisparitySum / bp.aggregateDisparitySum).toFixed(2)}`,
                `perc delta % ${(100 * Math.abs(bp.aggregatePerceptual - naive.aggregatePerceptual) / naive.aggregatePerceptual).toFixed(3)}`);
}
