/** Serialization matching the engine's `.events.jsonl` byte-for-byte.
 *
 * The engine writes one compact JSON object per line with a fixed key
 * order and Python float formatting (integral floats keep a trailing
 * `.0`). Reproducing that here lets the UI transcript be compared
 * directly against a harness replay of the same trace.
 */

import type { AudioEventJson, TouchEventJson } from "./types.js";

/** Python-repr formatting for a float field: `1` -> "1.0", else the
 * shortest round-trip decimal, which V8 and CPython agree on. */
export function formatFloat(v: number): string {
  return Number.isInteger(v) ? `${v}.0` : `${v}`;
}

export function serializeAudioEvent(ev: AudioEventJson): string {
  const head = `{"t":${ev.t},"type":"${ev.type}"`;
  switch (ev.type) {
    case "speech":
      return `${head},"text":${JSON.stringify(ev.text)},"volume":${formatFloat(ev.volume)},"voice":"${ev.voice}"}`;
    case "earcon":
      return `${head},"kind":"${ev.kind}"}`;
    case "tone":
      return `${head},"kind":"${ev.kind}","action":"${ev.action}"}`;
    case "beep_rate":
      return `${head},"interval_ms":${ev.interval_ms === null ? "null" : ev.interval_ms}}`;
  }
}

export function serializeEventLog(events: AudioEventJson[]): string {
  return events.map((ev) => serializeAudioEvent(ev) + "\n").join("");
}

/** `.trace.json` content for a recorded pointer session. */
export function serializeTrace(events: TouchEventJson[]): string {
  const body = events
    .map(
      (e) =>
        `{"t":${e.t},"p":${e.p},"phase":"${e.phase}","x":${formatFloat(round9(e.x))},"y":${formatFloat(round9(e.y))}}`,
    )
    .join(",\n    ");
  return `{\n  "events": [\n    ${body}\n  ]\n}\n`;
}

/** Coordinates are stored with at most 9 fractional digits, like every
 * other artifact the harness writes. */
export function round9(v: number): number {
  return Math.round(v * 1e9) / 1e9;
}
