/**
 * PFM float map IO. Grayscale maps only ("Pf" header); rows are stored
 * bottom-to-top and the scale's sign encodes endianness. NaN marks invalid
 * pixels and is preserved as-is.
 */

import * as fs from 'fs';

export interface FloatMap {
  width: number;
  height: number;
  /** Row-major, top-down, length width*height. */
  data: Float32Array;
}

export function readPfm(path: string): FloatMap {
  const buf = fs.readFileSync(path);
  // header: magic, "W H", scale, each terminated by a single whitespace byte
  let pos = 0;
  const token = (): string => {
    while (pos < buf.length && /\s/.test(String.fromCharCode(buf[pos]))) pos++;
    const start = pos;
    while (pos < buf.length && !/\s/.test(String.fromCharCode(buf[pos]))) pos++;
    return buf.toString('ascii', start, pos);
  };
  const magic = token();
  if (magic !== 'Pf') throw new Error(`${path}: not a grayscale PFM (header ${magic})`);
  const width = parseInt(token(), 10);
  const height = parseInt(token(), 10);
  const scale = parseFloat(token());
  pos++; // the single whitespace after the scale line
  if (!(width > 0 && height > 0) || !isFinite(scale)) {
    throw new Error(`${path}: malformed PFM header`);
  }
  const n = width * height;
  if (buf.length - pos < 4 * n) throw new Error(`${path}: truncated PFM payload`);
  const littleEndian = scale < 0;
  const view = new DataView(buf.buffer, buf.byteOffset + pos, 4 * n);
  const data = new Float32Array(n);
  for (let row = 0; row < height; row++) {
    const srcRow = height - 1 - row; // bottom-up storage
    for (let x = 0; x < width; x++) {
      data[row * width + x] = view.getFloat32(4 * (srcRow * width + x), littleEndian);
    }
  }
  return { width, height, data };
}

export function writePfm(path: string, map: FloatMap): void {
  const { width, height, data } = map;
  const header = Buffer.from(`Pf\n${width} ${height}\n-1.0\n`, 'ascii');
  const body = Buffer.alloc(4 * width * height);
  for (let row = 0; row < height; row++) {
    const dstRow = height - 1 - row;
    for (let x = 0; x < width; x++) {
      body.writeFloatLE(data[row * width + x], 4 * (dstRow * width + x));
    }
  }
  fs.writeFileSync(path, Buffer.concat([header, body]));
}
