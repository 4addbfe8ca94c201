/** Wire types shared with the engine service and its file formats. */

export type TouchPhase = "down" | "move" | "up";

/** One raw touch sample, as stored in `.trace.json` under `events`. */
export interface TouchEventJson {
  t: number; // milliseconds from session start, non-decreasing
  p: number; // pointer id
  phase: TouchPhase;
  x: number; // normalized [0, 1]
  y: number; // normalized [0, 1]
}

export type EarconKind = "first_touch" | "menu_wrap" | "zoom_confirm" | "beacon_arrived";
export type ToneKind = "off_area_warning" | "bleed_warning";

/** One audio event, as stored per line in `.events.jsonl`. */
export type AudioEventJson =
  | { t: number; type: "speech"; text: string; volume: number; voice: "primary" | "secondary" }
  | { t: number; type: "earcon"; kind: EarconKind }
  | { t: number; type: "tone"; kind: ToneKind; action: "start" | "stop" }
  | { t: number; type: "beep_rate"; interval_ms: number | null };

export interface AreaJson {
  label: string;
  polygon: [number, number][];
  recommended?: boolean;
  prominence?: number | null;
  sub_areas?: AreaJson[];
}

export interface AnnotationJson {
  image_id: string;
  width_px: number;
  height_px: number;
  caption?: string;
  areas: AreaJson[];
  cam?: { rows: number; cols: number; values: number[] };
}

export type ToolName = "menu_beacon" | "hints" | "quadrant_zoom";
