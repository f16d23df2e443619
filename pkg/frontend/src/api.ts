/** Typed client for the segmentation service JSON API. */

import type { RlePairs } from './rle.js';

export interface VolumeInfo {
  volume_id: string;
  depth: number;
  height: number;
  width: number;
}

export interface PromptPayload {
  points?: Array<[number, number]>;
  box?: [number, number, number, number];
}

export interface SegmentRequest {
  volume_id: string;
  slice_index: number;
  mode: 'auto' | 'prompt';
  prompts?: PromptPayload;
  use_depth_attention: boolean;
}

export interface SegmentResponse {
  mask_rle: RlePairs;
  shape: [number, number];
  latency_ms: number;
  gate_g: number;
}

export class ApiError extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

async function raiseForStatus(r: Response): Promise<void> {
  if (r.ok) return;
  let detail = r.statusText;
  try {
    const body = await r.json();
    if (body && typeof body.detail === 'string') detail = body.detail;
  } catch {
    /* non-JSON error body */
  }
  throw new ApiError(r.status, detail);
}

export class ServiceClient {
  constructor(public baseUrl: string) {}

  async uploadVolume(meta: Blob, raw: Blob): Promise<VolumeInfo> {
    const fd = new FormData();
    fd.append('meta', meta, 'volume.json');
    fd.append('raw', raw, 'volume.raw');
    const r = await fetch(`${this.baseUrl}/v1/volumes`, { method: 'POST', body: fd });
    await raiseForStatus(r);
    return (await r.json()) as VolumeInfo;
  }

  sliceUrl(volumeId: string, k: number): string {
    return `${this.baseUrl}/v1/volumes/${volumeId}/slices/${k}`;
  }

  async segment(req: SegmentRequest): Promise<SegmentResponse> {
    const r = await fetch(`${this.baseUrl}/v1/segment`, {
      method: 'POST',
      headers: { 'Content-Type': 'application/json' },
      body: JSON.stringify(req),
    });
    await raiseForStatus(r);
    return (await r.json()) as SegmentResponse;
  }

  async modelInfo(): Promise<{ bundle_hash: string; cfg: unknown; stage: string }> {
    const r = await fetch(`${this.baseUrl}/v1/model`);
    await raiseForStatus(r);
    return await r.json();
  }
}
