/** Canvas <-> native slice pixel mapping.
 *
 * The slice is rendered at an integer-free scale factor s = canvas/native;
 * pixel centers map to (p + 0.5) * s, and the inverse floors back to the
 * containing pixel, so the round trip is the identity on integer pixels.
 */

export interface Scale {
  sx: number;
  sy: number;
}

export function renderScale(
  nativeW: number, nativeH: number, canvasW: number, canvasH: number,
): Scale {
  return { sx: canvasW / nativeW, sy: canvasH / nativeH };
}

export function pixelToCanvas(px: number, py: number, s: Scale): [number, number] {
  return [(px + 0.5) * s.sx, (py + 0.5) * s.sy];
}

export function canvasToPixel(
  cx: number, cy: number, s: Scale, nativeW: number, nativeH: number,
): [number, number] {
  const px = Math.min(Math.max(Math.floor(cx / s.sx), 0), nativeW - 1);
  const py = Math.min(Math.max(Math.floor(cy / s.sy), 0), nativeH - 1);
  return [px, py];
}
