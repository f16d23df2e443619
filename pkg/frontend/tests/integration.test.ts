/** Round-trip tests against a live service (spawned by globalSetup). */

import { readFileSync } from 'node:fs';
import path from 'node:path';
import { fileURLToPath } from 'node:url';
import { beforeAll, describe, expect, it } from 'vitest';

import { ApiError, ServiceClient, VolumeInfo } from '../src/api.js';
import { decodeRle } from '../src/rle.js';
import { addPoint, newSession, segmentRequest } from '../src/state.js';

const here = path.dirname(fileURLToPath(import.meta.url));
const envPath = path.join(here, '..', '.test-env', 'service.json');

let client: ServiceClient;
let volumeStem: string;
let info: VolumeInfo;

function archiveBlobs(stem: string): { meta: Blob; raw: Blob } {
  return {
    meta: new Blob([readFileSync(`${stem}.json`)], { type: 'application/json' }),
    raw: new Blob([readFileSync(`${stem}.raw`)], { type: 'application/octet-stream' }),
  };
}

beforeAll(async () => {
  const env = JSON.parse(readFileSync(envPath, 'utf-8')) as {
    url: string;
    volumeStem: string;
  };
  client = new ServiceClient(env.url);
  volumeStem = env.volumeStem;
  const { meta, raw } = archiveBlobs(volumeStem);
  info = await client.uploadVolume(meta, raw);
});

describe('service round trip', () => {
  it('uploads and reports the volume geometry', () => {
    const header = JSON.parse(readFileSync(`${volumeStem}.json`, 'utf-8'));
    expect([info.depth, info.height, info.width]).toEqual(header.shape);
  });

  it('serves deterministic slice renderings', async () => {
    const r1 = await fetch(client.sliceUrl(info.volume_id, 0));
    const r2 = await fetch(client.sliceUrl(info.volume_id, 0));
    expect(r1.status).toBe(200);
    expect(Buffer.from(await r1.arrayBuffer()).equals(
      Buffer.from(await r2.arrayBuffer()))).toBe(true);
  });

  it('UI point-prompt request matches a direct service call byte-for-byte', async () => {
    // find a foreground pixel of slice 0 from the ground-truth mask archive
    const maskHeader = JSON.parse(readFileSync(`${volumeStem}_mask.json`, 'utf-8'));
    const [d, h, w] = maskHeader.shape as [number, number, number];
    const maskRaw = readFileSync(`${volumeStem}_mask.raw`);
    let sliceIdx = 0;
    let point: [number, number] | null = null;
    outer: for (let k = 0; k < d; k++) {
      for (let i = 0; i < h * w; i++) {
        if (maskRaw[k * h * w + i]) {
          sliceIdx = k;
          point = [i % w, Math.floor(i / w)];
          break outer;
        }
      }
    }
    expect(point).not.toBeNull();

    // the UI path: session state -> request payload -> decode
    const session = newSession(info.volume_id, info.depth, info.height, info.width);
    session.slice = sliceIdx;
    addPoint(session, point![0], point![1]);
    const uiResponse = await client.segment(segmentRequest(session));
    const uiMask = decodeRle(uiResponse.mask_rle, uiResponse.shape);

    // the direct path: hand-built JSON against the endpoint
    const direct = await fetch(`${client.baseUrl}/v1/segment`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify({
        volume_id: info.volume_id,
        slice_index: sliceIdx,
        mode: 'prompt',
        prompts: { points: [point] },
        use_depth_attention: false,
      }),
    });
    expect(direct.status).toBe(200);
    const directBody = await direct.json();
    const directMask = decodeRle(directBody.mask_rle, directBody.shape);

    expect(uiMask.length).toBe(info.height * info.width);
    expect(Buffer.from(uiMask).equals(Buffer.from(directMask))).toBe(true);
  });

  it('surfaces 409 when depth attention is requested without a 3D bundle', async () => {
    const session = newSession(info.volume_id, info.depth, info.height, info.width);
    session.useDepthAttention = true;
    let caught: unknown = null;
    try {
      await client.segment(segmentRequest(session));
    } catch (err) {
      caught = err;
    }
    expect(caught).toBeInstanceOf(ApiError);
    expect((caught as ApiError).status).toBe(409);
  });

  it('rejects malformed uploads with 400', async () => {
    const meta = new Blob(['not json at all'], { type: 'application/json' });
    const raw = new Blob([new Uint8Array(16)]);
    await expect(client.uploadVolume(meta, raw)).rejects.toMatchObject({ status: 400 });
  });
});
