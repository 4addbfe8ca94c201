/** Browser implementations of the renderer ports: Web Speech for
 * announcements, Web Audio oscillators for tones, beeps, and earcons.
 * Only constructed in the page (app.ts); tests drive the ports' shared
 * interface with fakes instead.
 */

import type { SoundPort, SpeechPort } from "./audio.js";
import type { EarconKind, ToneKind } from "./types.js";

export function speechAvailable(): boolean {
  return typeof window !== "undefined" && "speechSynthesis" in window;
}

export class WebSpeechPort implements SpeechPort {
  private secondaryVoice: SpeechSynthesisVoice | null = null;

  constructor() {
    const pick = () => {
      const voices = window.speechSynthesis.getVoices();
      // any second voice will do; the requirement is audible distinctness
      this.secondaryVoice = voices.length > 1 ? voices[1] : null;
    };
    pick();
    window.speechSynthesis.addEventListener?.("voiceschanged", pick);
  }

  speak(text: string, volume: number, voice: "primary" | "secondary"): void {
    const u = new SpeechSynthesisUtterance(text);
    u.volume = volume;
    if (voice === "secondary" && this.secondaryVoice) u.voice = this.secondaryVoice;
    window.speechSynthesis.speak(u);
  }

  cancel(): void {
    window.speechSynthesis.cancel();
  }
}

const TONE_HZ: Record<ToneKind, number> = {
  off_area_warning: 220,
  bleed_warning: 330,
};

const EARCON_NOTES: Record<EarconKind, number[]> = {
  first_touch: [880],
  menu_wrap: [660, 440],
  zoom_confirm: [523, 784],
  beacon_arrived: [784, 988, 1175],
};

export class WebAudioPort implements SoundPort {
  private readonly ctx: AudioContext;
  private readonly tones = new Map<ToneKind, { osc: OscillatorNode; gain: GainNode }>();
  private beepTimer: ReturnType<typeof setInterval> | null = null;

  constructor(ctx?: AudioContext) {
    this.ctx = ctx ?? new AudioContext();
  }

  startTone(kind: ToneKind): void {
    if (this.tones.has(kind)) return;
    const osc = this.ctx.createOscillator();
    const gain = this.ctx.createGain();
    osc.type = "triangle";
    osc.frequency.value = TONE_HZ[kind];
    gain.gain.value = 0.15;
    osc.connect(gain).connect(this.ctx.destination);
    osc.start();
    this.tones.set(kind, { osc, gain });
  }

  stopTone(kind: ToneKind): void {
    const active = this.tones.get(kind);
    if (!active) return;
    active.osc.stop();
    active.osc.disconnect();
    active.gain.disconnect();
    this.tones.delete(kind);
  }

  setBeepInterval(intervalMs: number | null): void {
    if (this.beepTimer !== null) {
      clearInterval(this.beepTimer);
      this.beepTimer = null;
    }
    if (intervalMs === null) return;
    this.click();
    this.beepTimer = setInterval(() => this.click(), intervalMs);
  }

  playEarcon(kind: EarconKind): void {
    let at = this.ctx.currentTime;
    for (const hz of EARCON_NOTES[kind]) {
      this.blip(hz, at, 0.09);
      at += 0.1;
    }
  }

  private click(): void {
    this.blip(1320, this.ctx.currentTime, 0.04);
  }

  private blip(hz: number, at: number, dur: number): void {
    const osc = this.ctx.createOscillator();
    const gain = this.ctx.createGain();
    osc.type = "sine";
    osc.frequency.value = hz;
    gain.gain.setValueAtTime(0.25, at);
    gain.gain.exponentialRampToValueAtTime(0.001, at + dur);
    osc.connect(gain).connect(this.ctx.destination);
    osc.start(at);
    osc.stop(at + dur);
  }
}
