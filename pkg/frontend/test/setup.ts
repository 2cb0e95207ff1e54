/**
 * Test fixture generation (idempotent): synthetic light fields + geometry
 * through the geometry toolkit's CLI, and the stand-in stylizer weights
 * through this package's pretrainer. Everything is seeded; existing files
 * are reused as-is, so the one-time cost (~2 min) is paid only on a clean
 * checkout.
 */

import { execFileSync } from 'child_process';
import * as fs from 'fs';
import * as path from 'path';

const ROOT = path.join(__dirname, '.fixtures');

function sh(args: string[]): void {
  execFileSync('python3', ['-m', 'lfconsist.cli', ...args], { stdio: 'inherit' });
}

function makeField(dir: string, grid: number, size: number,
                   backD: number, frontD: number): void {
  if (fs.existsSync(path.join(dir, 'geom', 'calibration.json'))) return;
  const lf = path.join(dir, 'lf');
  const geom = path.join(dir, 'geom');
  sh(['synth', '--out', lf, '--grid', String(grid), '--size', `${size}x${size}`,
      '--seed', '11', '--back-d', String(backD), '--front-d', String(frontD)]);
  sh(['calibrate', '--in', path.join(lf, 'manifest.json'), '--out', geom]);
  sh(['reverse', '--in', path.join(lf, 'manifest.json'),
      '--disp', path.join(geom, 'disp_s0_t0.pfm'), '--out', geom]);
}

export default async function setup(): Promise<void> {
  fs.mkdirSync(ROOT, { recursive: true });
  makeField(path.join(ROOT, 'small'), 1, 64, 1, 3);
  makeField(path.join(ROOT, 'desk'), 2, 128, 1, 3);

  const weights = path.join(ROOT, 'standin-weights.json');
  if (!fs.existsSync(weights)) {
    const { pretrainStylizer } = await import('../src/pretrain');
    pretrainStylizer().saveWeights(weights);
  }
}
