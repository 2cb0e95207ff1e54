import { pretrainStylizer } from './src/pretrain';
import { makeBuf } from './src/nn';
import { Rng } from './src/rng';

for (const seed of [0, 1, 2, 3, 42, 7]) {
  let last = 0;
  const net = pretrainStylizer({ seed, steps: 150, onProgress: (s, l) => { last = l; } });
  const x = makeBuf(32, 32, 3);
  const rng = new Rng(5);
  for (let i = 0; i < x.data.length; i++) x.data[i] = rng.next();
  const y = net.stylize(x);
  let mean = 0, sq = 0;
  for (const v of y.data) { mean += v; sq += v * v; }
  mean /= y.data.length;
  const std = Math.sqrt(Math.max(0, sq / y.data.length - mean * mean));
  console.error('seed', seed, 'last stock mse', last.toExponential(3), 'out std', std.toFixed(5));
}
