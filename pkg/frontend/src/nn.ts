/**
 * Minimal NHWC neural-net engine: 3x3 convolutions with manual backward
 * passes, residual and upsampling blocks, and an Adam optimizer, all on
 * plain Float32Arrays.
 *
 * Hand-rolled on purpose: this sandbox has no native or WASM backend capable
 * of training convolutions, and the pure-JS autodiff alternative runs its
 * gradient kernels two orders of magnitude slower than its forward pass,
 * which makes per-view optimization infeasible. Straight typed-array loops
 * run at memory speed and are bit-deterministic.
 */

import { Rng } from './rng';

export interface Buf {
  h: number;
  w: number;
  c: number;
  data: Float32Array;
}

export const makeBuf = (h: number, w: number, c: number): Buf =>
  ({ h, w, c, data: new Float32Array(h * w * c) });

export const cloneBuf = (b: Buf): Buf =>
  ({ h: b.h, w: b.w, c: b.c, data: b.data.slice() });

export interface Param {
  value: Float32Array;
  grad: Float32Array;
  shape: number[];
}

export const makeParam = (shape: number[], init?: Float32Array): Param => {
  const n = shape.reduce((a, b) => a * b, 1);
  return { value: init ?? new Float32Array(n), grad: new Float32Array(n), shape };
};

export type Activation = 'relu' | 'sigmoid' | 'none';

function activate(data: Float32Array, act: Activation): void {
  if (act === 'relu') {
    for (let i = 0; i < data.length; i++) if (data[i] < 0) data[i] = 0;
  } else if (act === 'sigmoid') {
    for (let i = 0; i < data.length; i++) data[i] = 1 / (1 + Math.exp(-data[i]));
  }
}

/** d(activation)/d(pre-activation) given the post-activation output. */
function activationGrad(dy: Float32Array, out: Float32Array, act: Activation): Float32Array {
  if (act === 'none') return dy;
  const d = new Float32Array(dy.length);
  if (act === 'relu') {
    for (let i = 0; i < dy.length; i++) d[i] = out[i] > 0 ? dy[i] : 0;
  } else {
    for (let i = 0; i < dy.length; i++) d[i] = dy[i] * out[i] * (1 - out[i]);
  }
  return d;
}

export interface Layer {
  forward(x: Buf): Buf;
  /** Accumulates parameter gradients; returns gradient w.r.t. the input. */
  backward(dy: Buf): Buf;
  params(): Param[];
  outChannels: number;
}

/** 3x3 'same' convolution, stride 1 or 2, with fused activation. */
export class Conv3x3 implements Layer {
  readonly kernel: Param; // [3, 3, inC, outC]
  readonly bias: Param; // [outC]
  private lastX: Buf | null = null;
  private lastY: Buf | null = null;

  constructor(readonly inC: number, readonly outC: number,
              readonly stride: 1 | 2, readonly act: Activation, rng?: Rng) {
    const k = new Float32Array(9 * inC * outC);
    if (rng) {
      const std = Math.sqrt(2 / (9 * inC));
      for (let i = 0; i < k.length; i++) k[i] = rng.gauss() * std;
    }
    this.kernel = makeParam([3, 3, inC, outC], k);
    this.bias = makeParam([outC]);
  }

  get outChannels(): number { return this.outC; }

  forward(x: Buf): Buf {
    const { h, w } = x;
    if (x.c !== this.inC) throw new Error(`expected ${this.inC} channels, got ${x.c}`);
    if (this.stride === 2 && (h % 2 !== 0 || w % 2 !== 0)) {
      throw new Error(`stride-2 conv needs even dims, got ${h}x${w}`);
    }
    const oh = h / this.stride;
    const ow = w / this.stride;
    const y = makeBuf(oh, ow, this.outC);
    const K = this.kernel.value;
    const B = this.bias.value;
    const inC = this.inC;
    const outC = this.outC;
    for (let oy = 0; oy < oh; oy++) {
      for (let ox = 0; ox < ow; ox++) {
        const yBase = (oy * ow + ox) * outC;
        for (let oc = 0; oc < outC; oc++) y.data[yBase + oc] = B[oc];
        for (let ky = 0; ky < 3; ky++) {
          const iy = oy * this.stride + ky - 1;
          if (iy < 0 || iy >= h) continue;
          for (let kx = 0; kx < 3; kx++) {
            const ix = ox * this.stride + kx - 1;
            if (ix < 0 || ix >= w) continue;
            const xBase = (iy * w + ix) * inC;
            const kBase = (ky * 3 + kx) * inC * outC;
            for (let ic = 0; ic < inC; ic++) {
              const xv = x.data[xBase + ic];
              if (xv === 0) continue;
              const kRow = kBase + ic * outC;
              for (let oc = 0; oc < outC; oc++) {
                y.data[yBase + oc] += xv * K[kRow + oc];
              }
            }
          }
        }
      }
    }
    activate(y.data, this.act);
    this.lastX = x;
    this.lastY = y;
    return y;
  }

  backward(dy: Buf): Buf {
    const x = this.lastX!;
    const y = this.lastY!;
    const { h, w } = x;
    const oh = y.h;
    const ow = y.w;
    const inC = this.inC;
    const outC = this.outC;
    const dPre = activationGrad(dy.data, y.data, this.act);
    const dx = makeBuf(h, w, inC);
    const K = this.kernel.value;
    const dK = this.kernel.grad;
    const dB = this.bias.grad;
    for (let oy = 0; oy < oh; oy++) {
      for (let ox = 0; ox < ow; ox++) {
        const yBase = (oy * ow + ox) * outC;
        for (let oc = 0; oc < outC; oc++) dB[oc] += dPre[yBase + oc];
        for (let ky = 0; ky < 3; ky++) {
          const iy = oy * this.stride + ky - 1;
          if (iy < 0 || iy >= h) continue;
          for (let kx = 0; kx < 3; kx++) {
            const ix = ox * this.stride + kx - 1;
            if (ix < 0 || ix >= w) continue;
            const xBase = (iy * w + ix) * inC;
            const kBase = (ky * 3 + kx) * inC * outC;
            for (let ic = 0; ic < inC; ic++) {
              const xv = x.data[xBase + ic];
              const kRow = kBase + ic * outC;
              let acc = 0;
              for (let oc = 0; oc < outC; oc++) {
                const g = dPre[yBase + oc];
                dK[kRow + oc] += xv * g;
                acc += K[kRow + oc] * g;
              }
              dx.data[xBase + ic] += acc;
            }
          }
        }
      }
    }
    return dx;
  }

  params(): Param[] {
    return [this.kernel, this.bias];
  }
}

/** Residual block: relu(x + conv(relu(conv(x)))). */
export class ResBlock implements Layer {
  private readonly c1: Conv3x3;
  private readonly c2: Conv3x3;
  private lastSumRelu: Buf | null = null;

  constructor(readonly channels: number, rng?: Rng) {
    this.c1 = new Conv3x3(channels, channels, 1, 'relu', rng);
    this.c2 = new Conv3x3(channels, channels, 1, 'none', rng);
  }

  get outChannels(): number { return this.channels; }

  forward(x: Buf): Buf {
    const inner = this.c2.forward(this.c1.forward(x));
    const y = makeBuf(x.h, x.w, x.c);
    for (let i = 0; i < y.data.length; i++) {
      const v = x.data[i] + inner.data[i];
      y.data[i] = v > 0 ? v : 0;
    }
    this.lastSumRelu = y;
    return y;
  }

  backward(dy: Buf): Buf {
    const y = this.lastSumRelu!;
    const dSum = makeBuf(dy.h, dy.w, dy.c);
    for (let i = 0; i < dy.data.length; i++) {
      dSum.data[i] = y.data[i] > 0 ? dy.data[i] : 0;
    }
    const dInner = this.c1.backward(this.c2.backward(dSum));
    for (let i = 0; i < dInner.data.length; i++) dInner.data[i] += dSum.data[i];
    return dInner;
  }

  params(): Param[] {
    return [...this.c1.params(), ...this.c2.params()];
  }
}

/** Nearest-neighbor 2x upsampling followed by a stride-1 convolution. */
export class UpConv implements Layer {
  private readonly conv: Conv3x3;

  constructor(inC: number, outC: number, act: Activation, rng?: Rng) {
    this.conv = new Conv3x3(inC, outC, 1, act, rng);
  }

  get outChannels(): number { return this.conv.outC; }

  forward(x: Buf): Buf {
    const up = makeBuf(x.h * 2, x.w * 2, x.c);
    for (let y = 0; y < up.h; y++) {
      const sy = y >> 1;
      for (let xpos = 0; xpos < up.w; xpos++) {
        const sBase = (sy * x.w + (xpos >> 1)) * x.c;
        const dBase = (y * up.w + xpos) * x.c;
        for (let c = 0; c < x.c; c++) up.data[dBase + c] = x.data[sBase + c];
      }
    }
    return this.conv.forward(up);
  }

  backward(dy: Buf): Buf {
    const dUp = this.conv.backward(dy);
    const dx = makeBuf(dUp.h / 2, dUp.w / 2, dUp.c);
    for (let y = 0; y < dUp.h; y++) {
      const sy = y >> 1;
      for (let xpos = 0; xpos < dUp.w; xpos++) {
        const sBase = (sy * dx.w + (xpos >> 1)) * dx.c;
        const dBase = (y * dUp.w + xpos) * dx.c;
        for (let c = 0; c < dx.c; c++) dx.data[sBase + c] += dUp.data[dBase + c];
      }
    }
    return dx;
  }

  params(): Param[] {
    return this.conv.params();
  }
}

/** Adam with bias correction; state is per optimizer instance. */
export class Adam {
  private readonly m: Float32Array[];
  private readonly v: Float32Array[];
  private t = 0;

  constructor(private readonly parameters: Param[],
              private readonly lr: number,
              private readonly beta1 = 0.9,
              private readonly beta2 = 0.999,
              private readonly eps = 1e-8) {
    this.m = parameters.map((p) => new Float32Array(p.value.length));
    this.v = parameters.map((p) => new Float32Array(p.value.length));
  }

  /** Apply accumulated gradients and zero them. */
  step(): void {
    this.t++;
    const c1 = 1 - Math.pow(this.beta1, this.t);
    const c2 = 1 - Math.pow(this.beta2, this.t);
    for (let p = 0; p < this.parameters.length; p++) {
      const { value, grad } = this.parameters[p];
      const m = this.m[p];
      const v = this.v[p];
      for (let i = 0; i < value.length; i++) {
        const g = grad[i];
        m[i] = this.beta1 * m[i] + (1 - this.beta1) * g;
        v[i] = this.beta2 * v[i] + (1 - this.beta2) * g * g;
        value[i] -= this.lr * (m[i] / c1) / (Math.sqrt(v[i] / c2) + this.eps);
        grad[i] = 0;
      }
    }
  }
}

export function zeroGrads(parameters: Param[]): void {
  for (const p of parameters) p.grad.fill(0);
}
