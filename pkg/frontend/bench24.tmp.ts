import { TransformNet } from './src/net';
import { makeBuf } from './src/nn';
import { Rng } from './src/rng';

const check = (tag: string, net: TransformNet) => {
  const x = makeBuf(32, 32, 3);
  const rng = new Rng(5);
  for (let i = 0; i < x.data.length; i++) x.data[i] = rng.next();
  const y = net.stylize(x);
  let mean = 0, sq = 0;
  for (const v of y.data) { mean += v; sq += v * v; }
  mean /= y.data.length;
  console.error(tag, 'mean', mean.toFixed(4), 'std',
                Math.sqrt(Math.max(0, sq / y.data.length - mean * mean)).toFixed(5));
};
const a = new TransformNet(42); a.loadWeights('/tmp/standin.json');
check('standin(42)', a);
const b = new TransformNet(0); b.loadWeights('/tmp/pretrained2.json');
check('pretrained2(0)', b);
