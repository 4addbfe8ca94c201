/** Audio renderer: turns engine audio events into audible output.
 *
 * Rendering is split behind two ports so the logic is testable and the
 * app degrades gracefully: a SpeechPort (platform speech synthesis) and
 * a SoundPort (oscillators for tones, a repeating click for the beacon,
 * short samples for earcons). Every event is also appended to a visible
 * transcript in the exact `.events.jsonl` line format — that is the
 * fallback when audio is unavailable, and the artifact compared against
 * harness replays.
 */

import { serializeAudioEvent } from "./jsonl.js";
import type { AudioEventJson, EarconKind, ToneKind } from "./types.js";

export interface SpeechPort {
  /** volume in [0, 1]; voice distinguishes explored-entry readouts */
  speak(text: string, volume: number, voice: "primary" | "secondary"): void;
  cancel(): void;
}

export interface SoundPort {
  startTone(kind: ToneKind): void;
  stopTone(kind: ToneKind): void;
  /** null silences the beacon click train */
  setBeepInterval(intervalMs: number | null): void;
  playEarcon(kind: EarconKind): void;
}

export class AudioRenderer {
  private readonly transcriptLines: string[] = [];
  private readonly activeTones = new Set<ToneKind>();
  private beeping = false;

  constructor(
    private readonly speech: SpeechPort | null,
    private readonly sound: SoundPort | null,
    private readonly onTranscriptLine?: (line: string) => void,
  ) {}

  transcript(): string[] {
    return [...this.transcriptLines];
  }

  render(events: AudioEventJson[]): void {
    for (const ev of events) this.renderOne(ev);
  }

  renderOne(ev: AudioEventJson): void {
    const line = serializeAudioEvent(ev);
    this.transcriptLines.push(line);
    this.onTranscriptLine?.(line);
    switch (ev.type) {
      case "speech":
        this.speech?.speak(ev.text, ev.volume, ev.voice);
        break;
      case "earcon":
        this.sound?.playEarcon(ev.kind);
        break;
      case "tone":
        if (ev.action === "start") {
          this.activeTones.add(ev.kind);
          this.sound?.startTone(ev.kind);
        } else {
          this.activeTones.delete(ev.kind);
          this.sound?.stopTone(ev.kind);
        }
        break;
      case "beep_rate":
        this.beeping = ev.interval_ms !== null;
        this.sound?.setBeepInterval(ev.interval_ms);
        break;
    }
  }

  /** Session end: silence anything still sounding (a tone whose stop
   * never arrived, a still-scheduled beep train, queued speech). */
  teardown(): void {
    for (const kind of this.activeTones) this.sound?.stopTone(kind);
    this.activeTones.clear();
    if (this.beeping) {
      this.sound?.setBeepInterval(null);
      this.beeping = false;
    }
    this.speech?.cancel();
  }
}
