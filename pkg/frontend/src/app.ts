/** Interactive slice viewer: upload, navigate, prompt, segment, overlay. */

import { ApiError, ServiceClient } from './api.js';
import { canvasToPixel, pixelToCanvas, renderScale, Scale } from './coords.js';
import { overlayImage } from './overlay.js';
import { decodeRle } from './rle.js';
import {
  addPoint,
  clearDraft,
  newSession,
  SegmentationQueue,
  segmentRequest,
  setBox,
  setSlice,
  UISession,
} from './state.js';

const CANVAS_SIZE = 512;

export class App {
  client: ServiceClient;
  session: UISession | null = null;
  lastMask: Uint8Array | null = null;
  private sliceImage: HTMLImageElement | null = null;
  private dragStart: [number, number] | null = null;
  private queue: SegmentationQueue;

  private canvas: HTMLCanvasElement;
  private status: HTMLElement;
  private toast: HTMLElement;
  private sliceLabel: HTMLElement;
  private sliceSlider: HTMLInputElement;
  private attnToggle: HTMLInputElement;
  private opacitySlider: HTMLInputElement;

  constructor(root: HTMLElement, baseUrl: string) {
    this.client = new ServiceClient(baseUrl);
    root.innerHTML = `
      <div class="toolbar">
        <input type="file" id="files" multiple accept=".json,.raw" />
        <button id="segment">Segment</button>
        <button id="clear">Clear prompts</button>
        <label><input type="checkbox" id="attn" /> depth attention</label>
        <label>opacity <input type="range" id="opacity" min="0" max="100" value="40" /></label>
      </div>
      <div class="nav">
        <input type="range" id="slice" min="0" max="0" value="0" disabled />
        <span id="slice-label">no volume</span>
      </div>
      <canvas id="view" width="${CANVAS_SIZE}" height="${CANVAS_SIZE}"></canvas>
      <div id="status"></div>
      <div id="toast" class="toast" hidden></div>
    `;
    this.canvas = root.querySelector('#view') as HTMLCanvasElement;
    this.status = root.querySelector('#status') as HTMLElement;
    this.toast = root.querySelector('#toast') as HTMLElement;
    this.sliceLabel = root.querySelector('#slice-label') as HTMLElement;
    this.sliceSlider = root.querySelector('#slice') as HTMLInputElement;
    this.attnToggle = root.querySelector('#attn') as HTMLInputElement;
    this.opacitySlider = root.querySelector('#opacity') as HTMLInputElement;
    this.queue = new SegmentationQueue(() => this.doSegment());

    (root.querySelector('#files') as HTMLInputElement).addEventListener(
      'change', (e) => void this.onUpload(e));
    (root.querySelector('#segment') as HTMLElement).addEventListener(
      'click', () => void this.queue.trigger());
    (root.querySelector('#clear') as HTMLElement).addEventListener('click', () => {
      if (!this.session) return;
      clearDraft(this.session);
      this.lastMask = null;
      this.redraw();
    });
    this.sliceSlider.addEventListener('input', () => {
      if (!this.session) return;
      setSlice(this.session, Number(this.sliceSlider.value));
      clearDraft(this.session);
      this.lastMask = null;
      void this.loadSlice();
    });
    this.attnToggle.addEventListener('change', () => {
      if (this.session) this.session.useDepthAttention = this.attnToggle.checked;
    });
    this.opacitySlider.addEventListener('input', () => {
      if (!this.session) return;
      this.session.overlayOpacity = Number(this.opacitySlider.value) / 100;
      this.redraw();
    });
    this.canvas.addEventListener('mousedown', (e) => {
      this.dragStart = this.eventCanvasCoords(e);
    });
    this.canvas.addEventListener('mouseup', (e) => this.onPointerUp(e));
  }

  scale(): Scale {
    const s = this.session!;
    return renderScale(s.width, s.height, this.canvas.width, this.canvas.height);
  }

  private eventCanvasCoords(e: MouseEvent): [number, number] {
    const rect = this.canvas.getBoundingClientRect();
    return [e.clientX - rect.left, e.clientY - rect.top];
  }

  /** Click appends a point; a drag across >3 canvas px defines a box. */
  onPointerUp(e: MouseEvent): void {
    if (!this.session || !this.dragStart) return;
    const [cx, cy] = this.eventCanvasCoords(e);
    const [sx, sy] = this.dragStart;
    this.dragStart = null;
    const s = this.scale();
    if (Math.hypot(cx - sx, cy - sy) <= 3) {
      const [px, py] = canvasToPixel(cx, cy, s, this.session.width, this.session.height);
      addPoint(this.session, px, py);
    } else {
      const [x0, y0] = canvasToPixel(sx, sy, s, this.session.width, this.session.height);
      const [x1, y1] = canvasToPixel(cx, cy, s, this.session.width, this.session.height);
      setBox(this.session, x0, y0, x1, y1);
    }
    this.redraw();
  }

  async onUpload(e: Event): Promise<void> {
    const input = e.target as HTMLInputElement;
    const files = Array.from(input.files ?? []);
    const meta = files.find((f) => f.name.endsWith('.json'));
    const raw = files.find((f) => f.name.endsWith('.raw'));
    if (!meta || !raw) {
      this.showError('select the volume archive pair: <name>.json and <name>.raw');
      return;
    }
    try {
      const info = await this.client.uploadVolume(meta, raw);
      this.session = newSession(info.volume_id, info.depth, info.height, info.width);
      this.lastMask = null;
      this.sliceSlider.max = String(info.depth - 1);
      this.sliceSlider.value = '0';
      this.sliceSlider.disabled = info.depth <= 1;
      await this.loadSlice();
    } catch (err) {
      this.session = null;
      this.showError(this.describe(err));
    }
  }

  async loadSlice(): Promise<void> {
    const s = this.session!;
    this.sliceLabel.textContent = `slice ${s.slice + 1} / ${s.depth}`;
    const img = new Image();
    img.src = this.client.sliceUrl(s.volumeId, s.slice);
    await img.decode();
    this.sliceImage = img;
    this.redraw();
  }

  async doSegment(): Promise<void> {
    if (!this.session) return;
    const req = segmentRequest(this.session);
    try {
      const res = await this.client.segment(req);
      this.lastMask = decodeRle(res.mask_rle, res.shape);
      this.status.textContent =
        `mode ${req.mode} | ${res.latency_ms.toFixed(0)} ms | gate g = ${res.gate_g.toFixed(3)}`;
      this.redraw();
    } catch (err) {
      this.showError(this.describe(err));
    }
  }

  describe(err: unknown): string {
    if (err instanceof ApiError) {
      if (err.status === 409) return '3D model not loaded (depth attention unavailable)';
      return `service error ${err.status}: ${err.message}`;
    }
    return String(err);
  }

  redraw(): void {
    const ctx = this.canvas.getContext('2d')!;
    ctx.clearRect(0, 0, this.canvas.width, this.canvas.height);
    if (!this.session || !this.sliceImage) return;
    ctx.imageSmoothingEnabled = false;
    ctx.drawImage(this.sliceImage, 0, 0, this.canvas.width, this.canvas.height);

    const s = this.session;
    if (this.lastMask) {
      const rgba = overlayImage(this.lastMask, s.width, s.height, s.overlayOpacity);
      const off = document.createElement('canvas');
      off.width = s.width;
      off.height = s.height;
      off.getContext('2d')!.putImageData(new ImageData(rgba, s.width, s.height), 0, 0);
      ctx.drawImage(off, 0, 0, this.canvas.width, this.canvas.height);
    }

    const sc = this.scale();
    ctx.fillStyle = '#ff3060';
    for (const [px, py] of s.draft.points) {
      const [cx, cy] = pixelToCanvas(px, py, sc);
      ctx.beginPath();
      ctx.arc(cx, cy, 4, 0, 2 * Math.PI);
      ctx.fill();
    }
    if (s.draft.box) {
      const [x0, y0, x1, y1] = s.draft.box;
      const [cx0, cy0] = pixelToCanvas(x0, y0, sc);
      const [cx1, cy1] = pixelToCanvas(x1, y1, sc);
      ctx.strokeStyle = '#ff3060';
      ctx.lineWidth = 2;
      ctx.strokeRect(cx0, cy0, cx1 - cx0, cy1 - cy0);
    }
  }

  showError(message: string): void {
    this.toast.textContent = message;
    this.toast.hidden = false;
    setTimeout(() => {
      this.toast.hidden = true;
    }, 4000);
  }
}
