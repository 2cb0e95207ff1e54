/**
 * Feed-forward stylization network with an encoder/decoder split.
 *
 * Architecture (NHWC, 3x3 kernels): three conv stages with two stride-2
 * downsamplings, two residual blocks, two upsample+conv stages, and a
 * sigmoid output conv. The split point between "encoder" and "decoder"
 * defaults to just after the residual blocks and is configurable; features
 * at the default split are at 1/4 spatial resolution.
 *
 * Weights come either from a JSON file or from a seeded deterministic
 * initialization. The seeded network stands in for a pre-trained stylizer:
 * its fixed random weights define the style, and every acceptance check is
 * relative (ratios between processing variants), not tied to a particular
 * learned style.
 */

import * as fs from 'fs';
import { Buf, Conv3x3, Layer, Param, ResBlock, UpConv, cloneBuf } from './nn';
import { Rng } from './rng';

const CHANNELS = [3, 8, 16, 32] as const;
export const DEFAULT_SPLIT = 5; // after the residual blocks

export class TransformNet {
  readonly blocks: Layer[];
  readonly split: number;
  readonly seed: number;

  constructor(seed: number, split: number = DEFAULT_SPLIT) {
    this.seed = seed;
    const rng = new Rng(seed * 2654435761 + 17);
    this.blocks = [
      new Conv3x3(CHANNELS[0], CHANNELS[1], 1, 'relu', rng),
      new Conv3x3(CHANNELS[1], CHANNELS[2], 2, 'relu', rng),
      new Conv3x3(CHANNELS[2], CHANNELS[3], 2, 'relu', rng),
      new ResBlock(CHANNELS[3], rng),
      new ResBlock(CHANNELS[3], rng),
      new UpConv(CHANNELS[3], CHANNELS[2], 'relu', rng),
      new UpConv(CHANNELS[2], CHANNELS[1], 'relu', rng),
      new Conv3x3(CHANNELS[1], CHANNELS[0], 1, 'sigmoid', rng),
    ];
    if (split < 1 || split >= this.blocks.length) {
      throw new Error(`split must be in [1, ${this.blocks.length - 1}], got ${split}`);
    }
    this.split = split;
  }

  encode(x: Buf): Buf {
    let y = x;
    for (const b of this.blocks.slice(0, this.split)) y = b.forward(y);
    return y;
  }

  decode(f: Buf): Buf {
    let y = f;
    for (const b of this.blocks.slice(this.split)) y = b.forward(y);
    return y;
  }

  /** Stock feed-forward stylization: decode(encode(x)). */
  stylize(x: Buf): Buf {
    return cloneBuf(this.decode(this.encode(x)));
  }

  /** Backpropagate through the decoder; returns gradient at the features. */
  decodeBackward(dOut: Buf): Buf {
    let g = dOut;
    for (const b of this.blocks.slice(this.split).reverse()) g = b.backward(g);
    return g;
  }

  /** Backpropagate through the encoder; returns gradient at the input. */
  encodeBackward(dFeatures: Buf): Buf {
    let g = dFeatures;
    for (const b of this.blocks.slice(0, this.split).reverse()) g = b.backward(g);
    return g;
  }

  /** Spatial downsampling factor of the encoder at the configured split. */
  get encoderStride(): number {
    let f = 1;
    for (const b of this.blocks.slice(0, this.split)) {
      if (b instanceof Conv3x3 && b.stride === 2) f *= 2;
      if (b instanceof UpConv) f /= 2;
    }
    return f;
  }

  get featureChannels(): number {
    return this.blocks[this.split - 1].outChannels;
  }

  get parameters(): Param[] {
    return this.blocks.flatMap((b) => b.params());
  }

  saveWeights(path: string): void {
    const weights = this.parameters.map((p) => ({
      shape: p.shape, values: Array.from(p.value),
    }));
    fs.writeFileSync(path, JSON.stringify({ split: this.split, weights }));
  }

  loadWeights(path: string): void {
    const raw = JSON.parse(fs.readFileSync(path, 'utf8'));
    const params = this.parameters;
    if (!Array.isArray(raw.weights) || raw.weights.length !== params.length) {
      throw new Error(`${path}: expected ${params.length} weight tensors`);
    }
    params.forEach((p, i) => {
      const w = raw.weights[i];
      if (!Array.isArray(w.values) || w.values.length !== p.value.length) {
        throw new Error(`${path}: weight ${i} size mismatch`);
      }
      p.value.set(w.values);
    });
  }

  /** Deep copy, so one run cannot perturb another's starting point. */
  clone(): TransformNet {
    const copy = new TransformNet(this.seed, this.split);
    copy.parameters.forEach((p, i) => p.value.set(this.parameters[i].value));
    return copy;
  }
}
