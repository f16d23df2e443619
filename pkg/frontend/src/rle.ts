/** Row-major run-length encoding of binary masks as [start, length] pairs. */

export type RlePairs = Array<[number, number]>;

export function decodeRle(runs: RlePairs, shape: [number, number]): Uint8Array {
  const n = shape[0] * shape[1];
  const out = new Uint8Array(n);
  for (const run of runs) {
    if (!Array.isArray(run) || run.length !== 2) {
      throw new Error(`bad run ${JSON.stringify(run)}`);
    }
    const [start, length] = run;
    if (start < 0 || length <= 0 || start + length > n) {
      throw new Error(`run [${start},${length}] outside mask of ${n} pixels`);
    }
    out.fill(1, start, start + length);
  }
  return out;
}

export function encodeRle(mask: Uint8Array): RlePairs {
  const runs: RlePairs = [];
  let i = 0;
  while (i < mask.length) {
    if (mask[i]) {
      const start = i;
      while (i < mask.length && mask[i]) i++;
      runs.push([start, i - start]);
    } else {
      i++;
    }
  }
  return runs;
}
