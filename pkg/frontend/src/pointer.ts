/** Pointer bridge: native pointer input -> normalized touch events.
 *
 * Positions are normalized against the canvas rectangle at the moment
 * of the event, so window resizes mid-session keep mapping the same
 * canvas position to the same normalized point. Events landing outside
 * the canvas are ignored. Timestamps are clamped non-decreasing.
 *
 * Keyboard fallbacks let mouse users exercise the two-finger gestures:
 * holding `z` turns the next click into a synthetic two-finger double
 * tap (zoom in) and holding `x` into a two-finger triple tap (zoom
 * out). The synthetic sequences use the same timings as the harness's
 * scripted traces, so they classify identically.
 */

import type { TouchEventJson, TouchPhase } from "./types.js";

export interface CanvasRect {
  left: number;
  top: number;
  width: number;
  height: number;
}

export interface PointerSample {
  clientX: number;
  clientY: number;
  pointerId?: number;
}

export interface PointerBridgeOptions {
  getRect: () => CanvasRect;
  /** Milliseconds clock; defaults to performance.now / Date.now. */
  now?: () => number;
  onEvents: (events: TouchEventJson[]) => void;
}

const ZOOM_IN_KEY = "z";
const ZOOM_OUT_KEY = "x";
/** Second synthetic finger lands this far right of the click. */
const SECOND_FINGER_DX = 0.015;

export class PointerBridge {
  private readonly getRect: () => CanvasRect;
  private readonly clock: () => number;
  private readonly onEvents: (events: TouchEventJson[]) => void;
  private readonly recorded: TouchEventJson[] = [];
  private readonly pointerIds = new Map<number, number>();
  private startMs: number | null = null;
  private lastMs = 0;
  private heldKey: string | null = null;

  constructor(opts: PointerBridgeOptions) {
    this.getRect = opts.getRect;
    this.clock = opts.now ?? (() => (typeof performance !== "undefined" ? performance.now() : Date.now()));
    this.onEvents = opts.onEvents;
  }

  /** Everything emitted so far, for `.trace.json` export. */
  trace(): TouchEventJson[] {
    return [...this.recorded];
  }

  keyDown(key: string): void {
    const k = key.toLowerCase();
    if (k === ZOOM_IN_KEY || k === ZOOM_OUT_KEY) this.heldKey = k;
  }

  keyUp(key: string): void {
    if (this.heldKey === key.toLowerCase()) this.heldKey = null;
  }

  pointerDown(sample: PointerSample): void {
    const pos = this.normalize(sample);
    if (!pos) return;
    if (this.heldKey !== null) {
      this.syntheticTwoFingerTaps(pos, this.heldKey === ZOOM_IN_KEY ? 2 : 3);
      return;
    }
    this.emit([this.makeEvent("down", this.mapPointer(sample), pos)]);
  }

  pointerMove(sample: PointerSample): void {
    const id = sample.pointerId ?? 0;
    if (!this.pointerIds.has(id)) return; // not pressed, or press was synthetic
    const pos = this.normalize(sample);
    if (!pos) return;
    this.emit([this.makeEvent("move", this.pointerIds.get(id)!, pos)]);
  }

  pointerUp(sample: PointerSample): void {
    const id = sample.pointerId ?? 0;
    if (!this.pointerIds.has(id)) return;
    const pos = this.normalize(sample) ?? this.lastKnown(id);
    const p = this.pointerIds.get(id)!;
    this.pointerIds.delete(id);
    if (pos) this.emit([this.makeEvent("up", p, pos, true)]);
  }

  private lastKnown(p: number): { x: number; y: number } | null {
    for (let i = this.recorded.length - 1; i >= 0; i--) {
      const e = this.recorded[i];
      if (e.p === p) return { x: e.x, y: e.y };
    }
    return null;
  }

  private normalize(sample: PointerSample): { x: number; y: number } | null {
    const rect = this.getRect();
    if (rect.width <= 0 || rect.height <= 0) return null;
    const x = (sample.clientX - rect.left) / rect.width;
    const y = (sample.clientY - rect.top) / rect.height;
    if (x < 0 || x > 1 || y < 0 || y > 1) return null;
    return { x, y };
  }

  private mapPointer(sample: PointerSample): number {
    const id = sample.pointerId ?? 0;
    if (!this.pointerIds.has(id)) {
      const used = new Set(this.pointerIds.values());
      let p = 0;
      while (used.has(p)) p++;
      this.pointerIds.set(id, p);
    }
    return this.pointerIds.get(id)!;
  }

  private nowMs(): number {
    const raw = this.clock();
    if (this.startMs === null) this.startMs = raw;
    const t = Math.max(Math.round(raw - this.startMs), this.lastMs);
    this.lastMs = t;
    return t;
  }

  private makeEvent(
    phase: TouchPhase,
    p: number,
    pos: { x: number; y: number },
    _release = false,
  ): TouchEventJson {
    return { t: this.nowMs(), p, phase, x: pos.x, y: pos.y };
  }

  private emit(events: TouchEventJson[]): void {
    this.recorded.push(...events);
    this.onEvents(events);
  }

  /** Two-finger tap sequence with the harness's scripted timings: the
   * second finger lands 10 ms after the first, both lift 70/75 ms in,
   * and repeats are 120 ms apart — comfortably inside the multi-tap
   * window, so the engine reads them as one two-finger multi-tap. */
  private syntheticTwoFingerTaps(pos: { x: number; y: number }, taps: number): void {
    const x1 = Math.min(pos.x + SECOND_FINGER_DX, 1);
    let t = this.nowMs();
    const seq: TouchEventJson[] = [];
    for (let i = 0; i < taps; i++) {
      seq.push({ t, p: 0, phase: "down", x: pos.x, y: pos.y });
      seq.push({ t: t + 10, p: 1, phase: "down", x: x1, y: pos.y });
      seq.push({ t: t + 70, p: 0, phase: "up", x: pos.x, y: pos.y });
      seq.push({ t: t + 75, p: 1, phase: "up", x: x1, y: pos.y });
      t += 195;
    }
    this.lastMs = seq[seq.length - 1].t + 400; // keep later input past the tap window
    this.emit(seq);
  }
}
