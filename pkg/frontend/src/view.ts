/** Sighted-debug overlay rendering.
 *
 * The study setup blanks the participant's screen; with `blankScreen`
 * on, render() returns before touching the drawing context at all — no
 * image pixel and no overlay pixel is produced (the canvas is styled
 * black by the page). Otherwise the overlay draws the CAM heatmap, area
 * outlines, button regions, and the active zoom viewport.
 */

import type { AnnotationJson, AreaJson } from "./types.js";

export interface ViewOptions {
  blankScreen: boolean;
  showOverlay: boolean;
  /** Active quadrant 0-3 while zoomed, or null. */
  zoomQuadrant: number | null;
}

/** The subset of CanvasRenderingContext2D the overlay uses; tests pass
 * a recording fake. */
export interface Draw2D {
  canvas: { width: number; height: number };
  fillStyle: string | CanvasGradient | CanvasPattern;
  strokeStyle: string | CanvasGradient | CanvasPattern;
  lineWidth: number;
  font: string;
  globalAlpha: number;
  clearRect(x: number, y: number, w: number, h: number): void;
  fillRect(x: number, y: number, w: number, h: number): void;
  strokeRect(x: number, y: number, w: number, h: number): void;
  beginPath(): void;
  moveTo(x: number, y: number): void;
  lineTo(x: number, y: number): void;
  closePath(): void;
  stroke(): void;
  fill(): void;
  fillText(text: string, x: number, y: number): void;
}

export function render(ctx: Draw2D, annotation: AnnotationJson | null, opts: ViewOptions): void {
  if (opts.blankScreen) return;
  const { width: w, height: h } = ctx.canvas;
  ctx.clearRect(0, 0, w, h);
  ctx.fillStyle = "#101014";
  ctx.fillRect(0, 0, w, h);
  if (!annotation || !opts.showOverlay) return;

  if (annotation.cam) {
    const { rows, cols, values } = annotation.cam;
    for (let r = 0; r < rows; r++) {
      for (let c = 0; c < cols; c++) {
        ctx.globalAlpha = 0.35 * values[r * cols + c];
        ctx.fillStyle = "#ff7043";
        ctx.fillRect((c / cols) * w, (r / rows) * h, w / cols + 1, h / rows + 1);
      }
    }
    ctx.globalAlpha = 1;
  }

  for (const area of annotation.areas) {
    drawArea(ctx, area, w, h, "#4fc3f7");
    for (const sub of area.sub_areas ?? []) drawArea(ctx, sub, w, h, "#aed581");
  }

  if (opts.zoomQuadrant !== null) {
    const q = opts.zoomQuadrant;
    ctx.strokeStyle = "#ffee58";
    ctx.lineWidth = 3;
    ctx.strokeRect((q % 2) * (w / 2), Math.floor(q / 2) * (h / 2), w / 2, h / 2);
  }
}

function drawArea(ctx: Draw2D, area: AreaJson, w: number, h: number, color: string): void {
  ctx.beginPath();
  area.polygon.forEach(([x, y], i) => {
    if (i === 0) ctx.moveTo(x * w, y * h);
    else ctx.lineTo(x * w, y * h);
  });
  ctx.closePath();
  ctx.strokeStyle = color;
  ctx.lineWidth = area.recommended ? 3 : 1.5;
  ctx.stroke();
  const [lx, ly] = area.polygon[0];
  ctx.fillStyle = color;
  ctx.font = "12px sans-serif";
  ctx.fillText(area.label, lx * w + 4, ly * h + 14);
}
