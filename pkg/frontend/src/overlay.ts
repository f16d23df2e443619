/** Mask overlay rendering: translucent fill plus an opaque boundary. */

export const FILL_RGB: [number, number, number] = [64, 160, 255];
export const EDGE_RGB: [number, number, number] = [255, 200, 40];

export function isBoundary(mask: Uint8Array, w: number, h: number, x: number, y: number): boolean {
  if (!mask[y * w + x]) return false;
  if (x === 0 || y === 0 || x === w - 1 || y === h - 1) return true;
  return !(mask[y * w + x - 1] && mask[y * w + x + 1]
    && mask[(y - 1) * w + x] && mask[(y + 1) * w + x]);
}

/** RGBA buffer at native resolution; the caller scales it onto the canvas. */
export function overlayImage(mask: Uint8Array, w: number, h: number,
                             opacity: number): Uint8ClampedArray<ArrayBuffer> {
  const rgba = new Uint8ClampedArray(new ArrayBuffer(w * h * 4));
  for (let y = 0; y < h; y++) {
    for (let x = 0; x < w; x++) {
      const i = y * w + x;
      if (!mask[i]) continue;
      const edge = isBoundary(mask, w, h, x, y);
      const [r, g, b] = edge ? EDGE_RGB : FILL_RGB;
      rgba[i * 4] = r;
      rgba[i * 4 + 1] = g;
      rgba[i * 4 + 2] = b;
      rgba[i * 4 + 3] = Math.round(255 * (edge ? Math.min(1, opacity + 0.35) : opacity));
    }
  }
  return rgba;
}
