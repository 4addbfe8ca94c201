/** Page wiring: file/URL annotation loading, canvas input, audio
 * rendering, blank-screen toggle, and trace / event-log export. All
 * interaction rules live in the engine behind the local service — this
 * file only moves events back and forth.
 */

import { AudioRenderer } from "./audio.js";
import { EngineClient } from "./client.js";
import { serializeEventLog, serializeTrace } from "./jsonl.js";
import { PointerBridge } from "./pointer.js";
import type { AnnotationJson, AudioEventJson } from "./types.js";
import { render } from "./view.js";
import { speechAvailable, WebAudioPort, WebSpeechPort } from "./webaudio.js";

const SERVICE_URL = new URLSearchParams(location.search).get("engine") ?? "http://127.0.0.1:8765";

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

function download(name: string, content: string): void {
  const a = document.createElement("a");
  a.href = URL.createObjectURL(new Blob([content], { type: "application/json" }));
  a.download = name;
  a.click();
  URL.revokeObjectURL(a.href);
}

async function main(): Promise<void> {
  const canvas = el<HTMLCanvasElement>("canvas");
  const ctx = canvas.getContext("2d")!;
  const transcriptEl = el<HTMLPreElement>("transcript");
  const statusEl = el<HTMLElement>("status");
  const blankBox = el<HTMLInputElement>("blank");
  const overlayBox = el<HTMLInputElement>("overlay");
  const toolBoxes = ["menu_beacon", "hints", "quadrant_zoom"].map((t) => el<HTMLInputElement>(t));

  const client = new EngineClient(SERVICE_URL);
  let annotation: AnnotationJson | null = null;
  let sessionId: string | null = null;
  const audioLog: AudioEventJson[] = [];

  const renderer = new AudioRenderer(
    speechAvailable() ? new WebSpeechPort() : null,
    typeof AudioContext !== "undefined" ? new WebAudioPort() : null,
    (line) => {
      transcriptEl.textContent += line + "\n";
      transcriptEl.scrollTop = transcriptEl.scrollHeight;
    },
  );

  const repaint = () =>
    render(ctx, annotation, {
      blankScreen: blankBox.checked,
      showOverlay: overlayBox.checked,
      zoomQuadrant: null,
    });

  const bridge = new PointerBridge({
    getRect: () => canvas.getBoundingClientRect(),
    onEvents: (events) => {
      if (!sessionId) return;
      void client.sendTouch(sessionId, events).then((produced) => {
        audioLog.push(...produced);
        renderer.render(produced);
      });
    },
  });

  canvas.addEventListener("pointerdown", (e) => {
    canvas.setPointerCapture(e.pointerId);
    bridge.pointerDown(e);
  });
  canvas.addEventListener("pointermove", (e) => bridge.pointerMove(e));
  canvas.addEventListener("pointerup", (e) => bridge.pointerUp(e));
  window.addEventListener("keydown", (e) => bridge.keyDown(e.key));
  window.addEventListener("keyup", (e) => bridge.keyUp(e.key));
  blankBox.addEventListener("change", () => {
    canvas.classList.toggle("blank", blankBox.checked);
    repaint();
  });
  overlayBox.addEventListener("change", repaint);

  async function startSession(annot: AnnotationJson): Promise<void> {
    if (sessionId) {
      renderer.teardown();
      await client.close(sessionId).catch(() => undefined);
    }
    annotation = annot;
    audioLog.length = 0;
    transcriptEl.textContent = "";
    const tools = toolBoxes.filter((b) => b.checked).map((b) => b.id).join(",") || "none";
    const info = await client.createSession(annot, tools);
    sessionId = info.sessionId;
    statusEl.textContent = `${info.imageId} — ${info.caption ?? "no caption"} [${info.tools.join(", ") || "baseline"}]`;
    repaint();
  }

  el<HTMLInputElement>("file").addEventListener("change", async (e) => {
    const file = (e.target as HTMLInputElement).files?.[0];
    if (file) await startSession(JSON.parse(await file.text()) as AnnotationJson);
  });

  el<HTMLButtonElement>("finish").addEventListener("click", async () => {
    if (!sessionId) return;
    const produced = await client.finish(sessionId);
    audioLog.push(...produced);
    renderer.render(produced);
    renderer.teardown();
  });

  el<HTMLButtonElement>("export-trace").addEventListener("click", () => {
    download(`${annotation?.image_id ?? "session"}.trace.json`, serializeTrace(bridge.trace()));
  });

  el<HTMLButtonElement>("export-log").addEventListener("click", () => {
    download(`${annotation?.image_id ?? "session"}.events.jsonl`, serializeEventLog(audioLog));
  });

  const annotUrl = new URLSearchParams(location.search).get("annot");
  if (annotUrl) {
    const res = await fetch(annotUrl);
    await startSession((await res.json()) as AnnotationJson);
  } else {
    repaint();
  }
}

void main();
