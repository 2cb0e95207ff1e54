#!/usr/bin/env node
/**
 * lfstyle: stylize a light field's views with geometry-fused iterative
 * optimization, consuming the geometry toolkit's artifacts (manifest JSON,
 * view PNGs, disparity/mask PFMs).
 *
 *   lfstyle run     --in lf/manifest.json --geom geom/ --out styled/
 *   lfstyle compare --in lf/manifest.json --geom geom/ --out report.json
 */

import * as fs from 'fs';
import * as path from 'path';
import yargs from 'yargs';
import { hideBin } from 'yargs/helpers';
import { loadLightField, loadGeometry } from './field';
import { stylizeLightField, compareLossModes, VARIANTS, RunOptions,
         LossMode, LossTarget } from './stylize';
import { DEFAULT_SCHEDULE } from './schedule';
import { pretrainStylizer } from './pretrain';
import { writeRunCsv, writeStylizedViews, writeRunConfig } from './report';

const common = {
  in: { type: 'string' as const, demandOption: true, describe: 'Manifest JSON path' },
  geom: { type: 'string' as const, demandOption: true,
          describe: 'Directory of disp/mask PFMs' },
  variant: { type: 'string' as const, default: 'BPFuseFeatures',
             choices: Object.keys(VARIANTS) },
  'style-weights': { type: 'string' as const,
                     describe: 'Stylizer weight JSON (omit for the seeded default)' },
  lr: { type: 'number' as const, default: DEFAULT_SCHEDULE.learningRate },
  epochs: { type: 'number' as const, default: DEFAULT_SCHEDULE.maxEpochs },
  loss: { type: 'string' as const, default: 'disp', choices: ['disp', 'both'] },
  'loss-target': { type: 'string' as const, default: 'stylized-central',
                   choices: ['stylized-central', 'raw-central'] },
  seed: { type: 'number' as const, default: 0 },
  split: { type: 'number' as const,
           describe: 'Encoder/decoder split block index (default: after residual blocks)' },
  'perceptual-weight': { type: 'number' as const, default: 1e-4 },
};

function optionsFrom(argv: Record<string, unknown>): RunOptions {
  return {
    variant: argv.variant as string,
    schedule: {
      learningRate: argv.lr as number,
      maxEpochs: argv.epochs as number,
      firstViewMultiplier: DEFAULT_SCHEDULE.firstViewMultiplier,
    },
    lossMode: argv.loss as LossMode,
    lossTarget: argv['loss-target'] as LossTarget,
    seed: argv.seed as number,
    split: argv.split as number | undefined,
    styleWeightsPath: argv['style-weights'] as string | undefined,
    perceptualWeight: argv['perceptual-weight'] as number,
  };
}

export async function main(args: string[]): Promise<unknown> {
  return yargs(args)
    .command('run', 'Stylize all views and write PNGs, CSV, and run config',
      { ...common, out: { type: 'string' as const, demandOption: true } },
      (argv) => {
        const lf = loadLightField(argv.in as string);
        const geometry = loadGeometry(argv.geom as string, lf);
        const options = optionsFrom(argv);
        const result = stylizeLightField(lf, geometry, options);
        const out = argv.out as string;
        writeStylizedViews(result, lf, out);
        writeRunCsv(result, path.join(out, 'report.csv'));
        writeRunConfig(options, result, path.join(out, 'run-config.json'));
        console.log(`${options.variant}: aggregate disparity loss ` +
                    `${result.aggregateDisparitySum.toPrecision(6)}, ` +
                    `perceptual ${result.aggregatePerceptual.toPrecision(6)}, ` +
                    `${result.totalSeconds.toFixed(1)}s`);
      })
    .command('compare', 'Run disparity-only vs combined loss and report both',
      { ...common, out: { type: 'string' as const, demandOption: true,
                          describe: 'Report JSON path' } },
      (argv) => {
        const lf = loadLightField(argv.in as string);
        const geometry = loadGeometry(argv.geom as string, lf);
        const { lossMode: _ignored, ...options } = optionsFrom(argv);
        const report = compareLossModes(lf, geometry, options);
        fs.writeFileSync(argv.out as string, JSON.stringify(report, null, 2) + '\n');
        console.log(`disp-only: loss ${report.dispOnly.aggregateDisparitySum.toPrecision(6)} ` +
                    `in ${report.dispOnly.seconds.toFixed(1)}s; ` +
                    `combined: loss ${report.combined.aggregateDisparitySum.toPrecision(6)} ` +
                    `in ${report.combined.seconds.toFixed(1)}s`);
      })
    .command('pretrain', 'Fit the deterministic stand-in stylizer and save its weights',
      {
        out: { type: 'string' as const, demandOption: true, describe: 'Weight JSON path' },
        seed: { type: 'number' as const, default: 0 },
        steps: { type: 'number' as const, default: 400 },
        'image-size': { type: 'number' as const, default: 64 },
        split: { type: 'number' as const,
                 describe: 'Encoder/decoder split block index (default: after residual blocks)' },
        'resample-weight': { type: 'number' as const,
                             describe: 'Weight of the decoder-resampling term' },
        'offset-range': { type: 'number' as const,
                          describe: 'Max feature-cell translation for the resampling term' },
        'equivariance-weight': { type: 'number' as const,
                                 describe: 'Weight of the end-to-end shift-equivariance term' },
      },
      (argv) => {
        const net = pretrainStylizer({
          seed: argv.seed as number,
          steps: argv.steps as number,
          imageSize: argv['image-size'] as number,
          split: argv.split as number | undefined,
          resampleWeight: argv['resample-weight'] as number | undefined,
          offsetRange: argv['offset-range'] as number | undefined,
          equivarianceWeight: argv['equivariance-weight'] as number | undefined,
          onProgress: (step, loss) =>
            console.log(`step ${step}: stock mse ${loss.toExponential(3)}`),
        });
        net.saveWeights(argv.out as string);
        console.log(`wrote ${argv.out}`);
      })
    .demandCommand(1)
    .strict()
    .fail((msg, err) => {
      console.error(msg ?? err?.message ?? 'unknown error');
      process.exit(2);
    })
    .parse();
}

if (require.main === module) {
  main(hideBin(process.argv)).catch((err) => {
    console.error(err instanceof Error ? err.message : String(err));
    process.exit(1);
  });
}
