/** 8-bit RGB PNG IO returning float images in [0, 1], shape (H, W, 3). */

import * as fs from 'fs';
import { PNG } from 'pngjs';

export interface Image {
  width: number;
  height: number;
  /** Row-major RGB, length width*height*3, values in [0, 1]. */
  data: Float32Array;
}

export function readPng(path: string): Image {
  const png = PNG.sync.read(fs.readFileSync(path));
  const n = png.width * png.height;
  const data = new Float32Array(3 * n);
  for (let i = 0; i < n; i++) {
    data[3 * i] = png.data[4 * i] / 255;
    data[3 * i + 1] = png.data[4 * i + 1] / 255;
    data[3 * i + 2] = png.data[4 * i + 2] / 255;
  }
  return { width: png.width, height: png.height, data };
}

export function writePng(path: string, img: Image): void {
  const png = new PNG({ width: img.width, height: img.height });
  const n = img.width * img.height;
  for (let i = 0; i < n; i++) {
    for (let c = 0; c < 3; c++) {
      const v = Math.min(1, Math.max(0, img.data[3 * i + c]));
      png.data[4 * i + c] = Math.floor(v * 255 + 0.5);
    }
    png.data[4 * i + 3] = 255;
  }
  fs.writeFileSync(path, PNG.sync.write(png));
}
