import { describe, it, expect } from 'vitest';
import * as fs from 'fs';
import * as os from 'os';
import * as path from 'path';
import { readPfm, writePfm } from '../src/pfm';
import { readPng, writePng, Image } from '../src/png';
import { loadLightField, loadGeometry, viewKey, LightField,
         ViewGeometry } from '../src/field';
import { backwardWarp, mapsToFeatureScale } from '../src/warp';
import { TransformNet, DEFAULT_SPLIT } from '../src/net';
import { Buf, makeBuf } from '../src/nn';
import { gramMatrix, perceptualLoss, proceduralStyleImage } from '../src/perceptual';
import { traversalOrder } from '../src/schedule';
import { stylizeLightField, fuseFeatures, runVariantSpec } from '../src/stylize';

const FIXTURES = path.join(__dirname, '.fixtures');
const tmp = (): string => fs.mkdtempSync(path.join(os.tmpdir(), 'lfstyle-'));

describe('pfm round trip', () => {
  it('preserves values, NaN, and dimensions', () => {
    const dir = tmp();
    const file = path.join(dir, 'x.pfm');
    const data = new Float32Array([1.5, -2.25, NaN, 0, 3e-5, -1e6]);
    writePfm(file, { width: 3, height: 2, data });
    const back = readPfm(file);
    expect(back.width).toBe(3);
    expect(back.height).toBe(2);
    for (let i = 0; i < data.length; i++) {
      if (Number.isNaN(data[i])) expect(Number.isNaN(back.data[i])).toBe(true);
      else expect(back.data[i]).toBe(data[i]);
    }
  });

  it('rejects non-grayscale magic', () => {
    const dir = tmp();
    const file = path.join(dir, 'bad.pfm');
    fs.writeFileSync(file, 'PF\n1 1\n-1.0\n\0\0\0\0\0\0\0\0\0\0\0\0');
    expect(() => readPfm(file)).toThrow(/not a grayscale PFM/);
  });
});

describe('png round trip', () => {
  it('is exact on the 8-bit grid', () => {
    const dir = tmp();
    const file = path.join(dir, 'x.png');
    const data = new Float32Array(4 * 3 * 3);
    for (let i = 0; i < data.length; i++) data[i] = Math.round((i / (data.length - 1)) * 255) / 255;
    writePng(file, { width: 4, height: 3, data });
    const back = readPng(file);
    expect(back.width).toBe(4);
    expect(back.height).toBe(3);
    for (let i = 0; i < data.length; i++) {
      expect(Math.abs(back.data[i] - data[i])).toBeLessThan(1e-7);
    }
  });
});

describe('light field loading', () => {
  it('loads the fixture grid with consistent dimensions', () => {
    const lf = loadLightField(path.join(FIXTURES, 'small', 'lf', 'manifest.json'));
    expect(lf.radiusS).toBe(1);
    expect(lf.views.size).toBe(9);
    expect(lf.views.get(viewKey(0, 0))!.width).toBe(lf.width);
    const geom = loadGeometry(path.join(FIXTURES, 'small', 'geom'), lf);
    expect(geom.size).toBe(9);
    expect(geom.get(viewKey(1, 1))!.disparity.width).toBe(lf.width);
  });

  it('rejects a missing manifest', () => {
    expect(() => loadLightField(path.join(FIXTURES, 'nope.json'))).toThrow();
  });
});

describe('backward warp', () => {
  const w = 8;
  const h = 8;
  const src = new Float32Array(w * h);
  for (let i = 0; i < src.length; i++) src[i] = i;

  it('is exact sampling at integer displacement', () => {
    const disp = new Float32Array(w * h).fill(2);
    const out = backwardWarp(src, w, h, 1, disp, 1, 0);
    for (let y = 0; y < h; y++) {
      for (let x = 0; x < w; x++) {
        if (x < 2) expect(out.defined[y * w + x]).toBe(0);
        else {
          expect(out.defined[y * w + x]).toBe(1);
          expect(out.data[y * w + x]).toBe(src[y * w + x - 2]);
        }
      }
    }
  });

  it('marks NaN-disparity pixels undefined', () => {
    const disp = new Float32Array(w * h).fill(0);
    disp[10] = NaN;
    const out = backwardWarp(src, w, h, 1, disp, 1, 1);
    expect(out.defined[10]).toBe(0);
    expect(out.data[10]).toBe(0);
    expect(out.defined[11]).toBe(1);
  });
});

describe('feature-scale maps', () => {
  it('scales disparity by the resolution ratio', () => {
    const disp = new Float32Array(16 * 16).fill(4);
    const mask = new Float32Array(16 * 16).fill(1);
    const maps = mapsToFeatureScale(disp, mask, 16, 16, 4, 4);
    for (let i = 0; i < 16; i++) {
      expect(maps.disparity[i]).toBeCloseTo(1, 6);
      expect(maps.mask[i]).toBe(1);
    }
  });

  it('invalidates cells touched by NaN and zeroes their mask', () => {
    const disp = new Float32Array(16 * 16).fill(1);
    const mask = new Float32Array(16 * 16).fill(1);
    disp[0] = NaN;
    const maps = mapsToFeatureScale(disp, mask, 16, 16, 4, 4);
    expect(Number.isNaN(maps.disparity[0])).toBe(true);
    expect(maps.mask[0]).toBe(0);
    expect(Number.isNaN(maps.disparity[15])).toBe(false);
  });
});

describe('feature fusion', () => {
  const f = makeBuf(2, 2, 3);
  const warped = new Float32Array(12);
  for (let i = 0; i < 12; i++) {
    f.data[i] = 0.25 * i;
    warped[i] = 1 - 0.05 * i;
  }

  it('is pass-through at mask 0 and warped-central at mask 1', () => {
    const zero = fuseFeatures(f, warped, new Float32Array(4).fill(0));
    const one = fuseFeatures(f, warped, new Float32Array(4).fill(1));
    for (let i = 0; i < 12; i++) {
      expect(zero.data[i]).toBe(f.data[i]);
      expect(one.data[i]).toBe(warped[i]);
    }
  });

  it('blends linearly at fractional mask', () => {
    const out = fuseFeatures(f, warped, new Float32Array(4).fill(0.25));
    for (let i = 0; i < 12; i++) {
      expect(out.data[i]).toBeCloseTo(0.25 * warped[i] + 0.75 * f.data[i], 6);
    }
  });
});

describe('gram matrix', () => {
  it('of a constant single-channel map is the normalized square', () => {
    const f = makeBuf(4, 4, 1);
    f.data.fill(0.5);
    const g = gramMatrix(f);
    expect(g.length).toBe(1);
    // sum(c*c over HW) / (H*W*C) = c^2
    expect(g[0]).toBeCloseTo(0.25, 6);
  });
});

describe('perceptual metric', () => {
  it('has zero content term against itself', () => {
    const x = proceduralStyleImage(16, 16, 3);
    const style = proceduralStyleImage(16, 16, 9);
    const loss = perceptualLoss(x as unknown as Buf, x as unknown as Buf,
                                style as unknown as Buf);
    expect(loss.content).toBe(0);
  });
});

describe('view traversal order', () => {
  it('visits every non-central view once, adjacently except at the skip', () => {
    const order = traversalOrder(2, 2);
    expect(order.length).toBe(24);
    const seen = new Set(order.map((v) => viewKey(v.s, v.t)));
    expect(seen.size).toBe(24);
    expect(seen.has('0,0')).toBe(false);
    let jumps = 0;
    for (let i = 1; i < order.length; i++) {
      const ds = Math.abs(order[i].s - order[i - 1].s);
      const dt = Math.abs(order[i].t - order[i - 1].t);
      if (ds + dt !== 1) jumps++;
    }
    expect(jumps).toBe(1); // only the central-view skip breaks adjacency
  });
});

describe('transform network', () => {
  it('has stride-4 features of the declared channel count at the default split', () => {
    const net = new TransformNet(7);
    const x = makeBuf(32, 32, 3);
    const f = net.encode(x);
    expect(net.encoderStride).toBe(4);
    expect(f.h).toBe(8);
    expect(f.w).toBe(8);
    expect(f.c).toBe(net.featureChannels);
  });

  it('stylize equals decode(encode(x)) and is deterministic', () => {
    const net = new TransformNet(7);
    const x = makeBuf(16, 16, 3);
    for (let i = 0; i < x.data.length; i++) x.data[i] = (i % 17) / 17;
    const a = net.stylize(x);
    const b = net.decode(net.encode(x));
    const c = new TransformNet(7).stylize(x);
    for (let i = 0; i < a.data.length; i++) {
      expect(a.data[i]).toBe(b.data[i]);
      expect(a.data[i]).toBe(c.data[i]);
    }
  });

  it('round-trips weights through save/load', () => {
    const dir = tmp();
    const file = path.join(dir, 'w.json');
    const net = new TransformNet(7);
    net.saveWeights(file);
    const other = new TransformNet(8);
    other.loadWeights(file);
    net.parameters.forEach((p, i) => {
      expect(Array.from(other.parameters[i].value)).toEqual(Array.from(p.value));
    });
  });

  it('rejects an out-of-range split', () => {
    expect(() => new TransformNet(0, 0)).toThrow(/split/);
  });
});

/** A synthetic in-memory field: identical views, optional custom geometry. */
function constantField(size: number, radius: number,
                       disparity: number, mask: number):
    { lf: LightField; geometry: Map<string, ViewGeometry> } {
  const central: Image = { width: size, height: size, data: new Float32Array(size * size * 3) };
  for (let i = 0; i < central.data.length; i++) central.data[i] = ((i * 37) % 101) / 101;
  const views = new Map<string, Image>();
  const geometry = new Map<string, ViewGeometry>();
  for (let t = -radius; t <= radius; t++) {
    for (let s = -radius; s <= radius; s++) {
      views.set(viewKey(s, t), { width: size, height: size, data: central.data.slice() });
      geometry.set(viewKey(s, t), {
        disparity: { width: size, height: size,
                     data: new Float32Array(size * size).fill(disparity) },
        mask: { width: size, height: size,
                data: new Float32Array(size * size).fill(mask) },
      });
    }
  }
  return { lf: { radiusS: radius, radiusT: radius, width: size, height: size, views }, geometry };
}

describe('stylization runs', () => {
  it('zero-disparity full-confidence field is a fixed point of feature fusion', () => {
    const { lf, geometry } = constantField(32, 1, 0, 1);
    const r = stylizeLightField(lf, geometry, {
      variant: 'BPFuseFeatures', seed: 3,
      schedule: { learningRate: 1e-2, maxEpochs: 0, firstViewMultiplier: 1 },
    });
    // fused features equal the central's, so every decoded view equals the
    // frozen stylized central and the masked loss is analytically zero
    expect(r.aggregateDisparitySum).toBeLessThan(1e-6);
  });

  it('Naive equals independent stock per-view stylization', () => {
    const lf = loadLightField(path.join(FIXTURES, 'small', 'lf', 'manifest.json'));
    const geometry = loadGeometry(path.join(FIXTURES, 'small', 'geom'), lf);
    const r = stylizeLightField(lf, geometry, { variant: 'Naive', seed: 5 });
    const net = new TransformNet(5);
    const view = lf.views.get(viewKey(1, -1))!;
    const stock = net.stylize({ h: lf.height, w: lf.width, c: 3, data: view.data.slice() });
    const got = r.stylized.get(viewKey(1, -1))!;
    for (let i = 0; i < stock.data.length; i++) {
      const clipped = Math.min(1, Math.max(0, stock.data[i]));
      expect(Math.abs(got.data[i] - clipped)).toBeLessThan(1e-6);
    }
  });

  it('NaiveFuse with mask 0 equals Naive', () => {
    const { lf, geometry } = constantField(32, 1, 1, 0);
    const a = stylizeLightField(lf, geometry, { variant: 'NaiveFuse', seed: 4 });
    const b = stylizeLightField(lf, geometry, { variant: 'Naive', seed: 4 });
    for (const key of a.stylized.keys()) {
      expect(Array.from(a.stylized.get(key)!.data))
        .toEqual(Array.from(b.stylized.get(key)!.data));
    }
  });

  it('backprop reaches encoder and decoder but never the frozen central', () => {
    const { lf, geometry } = constantField(32, 1, 1, 0.5);
    const r = stylizeLightField(lf, geometry, {
      variant: 'BPFuseFeatures', seed: 6,
      schedule: { learningRate: 1e-2, maxEpochs: 2, firstViewMultiplier: 1 },
    });
    const stock = new TransformNet(6);
    let encoderMoved = false;
    let decoderMoved = false;
    r.net.parameters.forEach((p, i) => {
      const moved = p.value.some((v, j) => v !== stock.parameters[i].value[j]);
      if (i < stock.blocks.slice(0, stock.split).flatMap((b) => b.params()).length) {
        encoderMoved = encoderMoved || moved;
      } else {
        decoderMoved = decoderMoved || moved;
      }
    });
    expect(encoderMoved).toBe(true);
    expect(decoderMoved).toBe(true);
    expect(Array.from(r.centralImageAfter)).toEqual(Array.from(r.centralImageBefore));
    expect(Array.from(r.centralFeaturesAfter)).toEqual(Array.from(r.centralFeaturesBefore));
  });

  it('rejects an unknown variant', () => {
    expect(() => runVariantSpec('Fancy')).toThrow(/unknown variant/);
  });
});
