import { describe, expect, it } from "vitest";

import { AudioRenderer, type SoundPort, type SpeechPort } from "../src/audio.js";
import type { AudioEventJson } from "../src/types.js";

function fakes() {
  const calls: string[] = [];
  const speech: SpeechPort = {
    speak: (text, volume, voice) => calls.push(`speak:${text}:${volume}:${voice}`),
    cancel: () => calls.push("cancel"),
  };
  const sound: SoundPort = {
    startTone: (kind) => calls.push(`tone+:${kind}`),
    stopTone: (kind) => calls.push(`tone-:${kind}`),
    setBeepInterval: (ms) => calls.push(`beep:${ms}`),
    playEarcon: (kind) => calls.push(`earcon:${kind}`),
  };
  return { calls, speech, sound };
}

describe("audio renderer", () => {
  it("passes speech volume through unchanged (0.3 vs 1.0 keeps the ratio)", () => {
    const { calls, speech, sound } = fakes();
    const r = new AudioRenderer(speech, sound);
    r.render([
      { t: 0, type: "speech", text: "sky", volume: 0.3, voice: "primary" },
      { t: 1, type: "speech", text: "tree", volume: 1.0, voice: "secondary" },
    ]);
    expect(calls).toEqual(["speak:sky:0.3:primary", "speak:tree:1:secondary"]);
  });

  it("silences an unmatched tone start on teardown", () => {
    const { calls, speech, sound } = fakes();
    const r = new AudioRenderer(speech, sound);
    r.renderOne({ t: 0, type: "tone", kind: "off_area_warning", action: "start" });
    r.teardown();
    expect(calls).toEqual(["tone+:off_area_warning", "tone-:off_area_warning", "cancel"]);
  });

  it("does not re-stop a tone that already stopped", () => {
    const { calls, speech, sound } = fakes();
    const r = new AudioRenderer(speech, sound);
    r.renderOne({ t: 0, type: "tone", kind: "bleed_warning", action: "start" });
    r.renderOne({ t: 5, type: "tone", kind: "bleed_warning", action: "stop" });
    r.teardown();
    expect(calls).toEqual(["tone+:bleed_warning", "tone-:bleed_warning", "cancel"]);
  });

  it("treats a null beep interval as silence and clears it on teardown", () => {
    const { calls, speech, sound } = fakes();
    const r = new AudioRenderer(speech, sound);
    r.renderOne({ t: 0, type: "beep_rate", interval_ms: 450 });
    r.renderOne({ t: 1, type: "beep_rate", interval_ms: null });
    r.teardown(); // beeping already off: no extra setBeepInterval call
    expect(calls).toEqual(["beep:450", "beep:null", "cancel"]);
  });

  it("keeps a transcript even with no audio ports (speech-unavailable fallback)", () => {
    const lines: string[] = [];
    const r = new AudioRenderer(null, null, (line) => lines.push(line));
    const events: AudioEventJson[] = [
      { t: 10, type: "speech", text: "house", volume: 1.0, voice: "primary" },
      { t: 12, type: "earcon", kind: "first_touch" },
      { t: 20, type: "beep_rate", interval_ms: null },
    ];
    r.render(events);
    expect(r.transcript()).toEqual(lines);
    expect(lines).toEqual([
      '{"t":10,"type":"speech","text":"house","volume":1.0,"voice":"primary"}',
      '{"t":12,"type":"earcon","kind":"first_touch"}',
      '{"t":20,"type":"beep_rate","interval_ms":null}',
    ]);
  });
});
