/** UI session state: slice navigation, prompt drafting, request payloads. */

import type { PromptPayload, SegmentRequest } from './api.js';

export type Mode = 'auto' | 'prompt';

export interface PromptDraft {
  points: Array<[number, number]>;
  box: [number, number, number, number] | null;
}

export interface UISession {
  volumeId: string;
  depth: number;
  height: number;
  width: number;
  slice: number;
  mode: Mode;
  useDepthAttention: boolean;
  draft: PromptDraft;
  overlayOpacity: number;
}

export function newSession(volumeId: string, depth: number, height: number,
                           width: number): UISession {
  return {
    volumeId, depth, height, width,
    slice: 0,
    mode: 'auto',
    useDepthAttention: false,
    draft: { points: [], box: null },
    overlayOpacity: 0.4,
  };
}

export function setSlice(s: UISession, k: number): void {
  if (k < 0 || k >= s.depth) throw new Error(`slice ${k} out of range [0, ${s.depth})`);
  s.slice = k;
}

/** Clicking adds a point and drops any box; drafting forces prompt mode. */
export function addPoint(s: UISession, px: number, py: number): void {
  s.draft.box = null;
  s.draft.points.push([px, py]);
  s.mode = 'prompt';
}

/** Dragging defines a box, replacing prior points and any earlier box. */
export function setBox(s: UISession, x0: number, y0: number, x1: number, y1: number): void {
  const box: [number, number, number, number] = [
    Math.min(x0, x1), Math.min(y0, y1), Math.max(x0, x1), Math.max(y0, y1),
  ];
  if (box[0] === box[2]) box[2] += 1;
  if (box[1] === box[3]) box[3] += 1;
  s.draft.points = [];
  s.draft.box = box;
  s.mode = 'prompt';
}

export function clearDraft(s: UISession): void {
  s.draft = { points: [], box: null };
  s.mode = 'auto';
}

export function draftEmpty(s: UISession): boolean {
  return s.draft.points.length === 0 && s.draft.box === null;
}

export function promptPayload(s: UISession): PromptPayload | undefined {
  if (s.mode !== 'prompt' || draftEmpty(s)) return undefined;
  if (s.draft.box !== null) return { box: s.draft.box };
  return { points: s.draft.points };
}

export function segmentRequest(s: UISession): SegmentRequest {
  const prompts = promptPayload(s);
  return {
    volume_id: s.volumeId,
    slice_index: s.slice,
    mode: prompts ? 'prompt' : 'auto',
    ...(prompts ? { prompts } : {}),
    use_depth_attention: s.useDepthAttention,
  };
}

/** Single in-flight request; later triggers coalesce to the newest state. */
export class SegmentationQueue {
  private inFlight = false;
  private pending = false;

  constructor(private run: () => Promise<void>) {}

  async trigger(): Promise<void> {
    if (this.inFlight) {
      this.pending = true;
      return;
    }
    this.inFlight = true;
    try {
      do {
        this.pending = false;
        await this.run();
      } while (this.pending);
    } finally {
      this.inFlight = false;
    }
  }
}
