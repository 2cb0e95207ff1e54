/** CSV / JSON reporting for stylization runs. */

import * as fs from 'fs';
import * as path from 'path';
import { RunResult, RunOptions } from './stylize';
import { writePng } from './png';
import { viewKey, gridIndices, LightField } from './field';

export function writeRunCsv(result: RunResult, file: string): void {
  const lines = ['s,t,epoch_count,disparity_loss,perceptual_loss,seconds'];
  for (const v of result.views) {
    lines.push(`${v.s},${v.t},${v.epochCount},${v.disparityLoss},` +
               `${v.perceptualLoss},${v.seconds}`);
  }
  fs.writeFileSync(file, lines.join('\n') + '\n');
}

export function writeStylizedViews(result: RunResult, lf: LightField, dir: string): void {
  fs.mkdirSync(dir, { recursive: true });
  for (const { s, t } of gridIndices(lf.radiusS, lf.radiusT)) {
    const img = result.stylized.get(viewKey(s, t));
    if (!img) throw new Error(`missing stylized view (${s},${t})`);
    writePng(path.join(dir, `styl_s${s}_t${t}.png`), img);
  }
}

export function writeRunConfig(options: RunOptions, result: RunResult, file: string): void {
  fs.writeFileSync(file, JSON.stringify({
    variant: options.variant,
    seed: options.seed ?? 0,
    split: options.split ?? null,
    loss_mode: options.lossMode ?? 'disp',
    loss_target: options.lossTarget ?? 'stylized-central',
    learning_rate: options.schedule?.learningRate ?? 1e-2,
    max_epochs: options.schedule?.maxEpochs ?? 50,
    style_weights: options.styleWeightsPath ?? null,
    perceptual_weight: options.perceptualWeight ?? 1e-4,
    aggregate_disparity_loss: result.aggregateDisparitySum,
    aggregate_perceptual_loss: result.aggregatePerceptual,
    total_seconds: result.totalSeconds,
  }, null, 2) + '\n');
}
