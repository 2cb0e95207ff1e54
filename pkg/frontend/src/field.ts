/**
 * Light field loading from the geometry toolkit's on-disk layout: a manifest
 * JSON describing the view grid, PNG views, and per-view disparity/mask PFMs
 * named disp_s{S}_t{T}.pfm / mask_s{S}_t{T}.pfm (NaN = invalid disparity).
 */

import * as fs from 'fs';
import * as path from 'path';
import { Image, readPng } from './png';
import { FloatMap, readPfm } from './pfm';

export interface ViewIndex {
  s: number;
  t: number;
}

export const viewKey = (s: number, t: number): string => `${s},${t}`;

export interface LightField {
  radiusS: number;
  radiusT: number;
  width: number;
  height: number;
  views: Map<string, Image>;
}

export interface ViewGeometry {
  disparity: FloatMap;
  mask: FloatMap;
}

export function gridIndices(radiusS: number, radiusT: number): ViewIndex[] {
  const out: ViewIndex[] = [];
  for (let t = -radiusT; t <= radiusT; t++) {
    for (let s = -radiusS; s <= radiusS; s++) out.push({ s, t });
  }
  return out;
}

function asPositiveInt(v: unknown, name: string): number {
  if (typeof v !== 'number' || !Number.isInteger(v) || v < 0) {
    throw new Error(`manifest field ${name} must be a non-negative integer`);
  }
  return v;
}

export function loadLightField(manifestPath: string): LightField {
  const raw = JSON.parse(fs.readFileSync(manifestPath, 'utf8'));
  const dir = path.dirname(manifestPath);
  const radiusS = asPositiveInt(raw.grid_radius_s, 'grid_radius_s');
  const radiusT = asPositiveInt(raw.grid_radius_t, 'grid_radius_t');
  const width = asPositiveInt(raw.width, 'width');
  const height = asPositiveInt(raw.height, 'height');
  const pattern: string = raw.view_pattern;
  if (typeof pattern !== 'string' || (pattern.match(/%d/g) || []).length !== 2) {
    throw new Error('manifest view_pattern must contain two %d placeholders');
  }
  const views = new Map<string, Image>();
  for (const { s, t } of gridIndices(radiusS, radiusT)) {
    const name = pattern.replace('%d', String(s)).replace('%d', String(t));
    const img = readPng(path.join(dir, name));
    if (img.width !== width || img.height !== height) {
      throw new Error(`view (${s},${t}) is ${img.width}x${img.height}, expected ${width}x${height}`);
    }
    views.set(viewKey(s, t), img);
  }
  return { radiusS, radiusT, width, height, views };
}

export function loadGeometry(geomDir: string, lf: LightField): Map<string, ViewGeometry> {
  const out = new Map<string, ViewGeometry>();
  for (const { s, t } of gridIndices(lf.radiusS, lf.radiusT)) {
    const disparity = readPfm(path.join(geomDir, `disp_s${s}_t${t}.pfm`));
    const mask = readPfm(path.join(geomDir, `mask_s${s}_t${t}.pfm`));
    for (const m of [disparity, mask]) {
      if (m.width !== lf.width || m.height !== lf.height) {
        throw new Error(`geometry map for (${s},${t}) is ${m.width}x${m.height}, ` +
                        `expected ${lf.width}x${lf.height}`);
      }
    }
    // masks are stored clamped but re-clamp defensively
    for (let i = 0; i < mask.data.length; i++) {
      const v = mask.data[i];
      mask.data[i] = Number.isNaN(v) ? 0 : Math.min(1, Math.max(0, v));
    }
    out.set(viewKey(s, t), { disparity, mask });
  }
  return out;
}
