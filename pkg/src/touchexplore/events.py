"""Event types crossing the engine boundary.

TouchEvent is the only input; AudioEvent is the only observable output.
AudioEvents serialize to one JSON object per line (`.events.jsonl`) with
a fixed key order so replay logs can be compared byte-for-byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .model import AreaPath

DOWN, MOVE, UP = "down", "move", "up"


@dataclass(frozen=True)
class TouchEvent:
    time_ms: int
    pointer_id: int
    phase: str  # down | move | up
    x: float
    y: float


class TraceError(ValueError):
    """Raised for malformed or non-monotonic touch traces."""


# ---------------------------------------------------------------------------
# Gestures

@dataclass(frozen=True)
class Gesture:
    time_ms: int


@dataclass(frozen=True)
class DragEnter(Gesture):
    path: AreaPath


@dataclass(frozen=True)
class DragExit(Gesture):
    path: AreaPath


@dataclass(frozen=True)
class Tap(Gesture):
    finger_count: int
    tap_count: int
    x: float
    y: float


@dataclass(frozen=True)
class HoldStart(Gesture):
    region: str  # "open_button" | "scroll_button"
    x: float = 0.0
    y: float = 0.0


@dataclass(frozen=True)
class HoldEnd(Gesture):
    region: str


# ---------------------------------------------------------------------------
# Audio events

SPEECH, EARCON, TONE, BEEP_RATE = "speech", "earcon", "tone", "beep_rate"

EARCON_KINDS = ("first_touch", "menu_wrap", "zoom_confirm", "beacon_arrived")
TONE_KINDS = ("off_area_warning", "bleed_warning")


@dataclass(frozen=True)
class AudioEvent:
    time_ms: int
    type: str
    payload: dict = field(default_factory=dict)

    def to_json(self) -> str:
        out: dict = {"t": self.time_ms, "type": self.type}
        if self.type == SPEECH:
            out["text"] = self.payload["text"]
            out["volume"] = round(float(self.payload["volume"]), 6)
            out["voice"] = self.payload["voice"]
        elif self.type == EARCON:
            out["kind"] = self.payload["kind"]
        elif self.type == TONE:
            out["kind"] = self.payload["kind"]
            out["action"] = self.payload["action"]
        elif self.type == BEEP_RATE:
            out["interval_ms"] = self.payload["interval_ms"]  # int or None (silent)
        else:
            raise ValueError(f"unknown audio event type {self.type!r}")
        return json.dumps(out, separators=(",", ":"), ensure_ascii=False)


def speech(t: int, text: str, volume: float = 1.0, voice: str = "primary") -> AudioEvent:
    if not text:
        raise ValueError("speech text must be non-empty")
    return AudioEvent(t, SPEECH, {"text": text, "volume": volume, "voice": voice})


def earcon(t: int, kind: str) -> AudioEvent:
    if kind not in EARCON_KINDS:
        raise ValueError(f"unknown earcon kind {kind!r}")
    return AudioEvent(t, EARCON, {"kind": kind})


def tone(t: int, kind: str, action: str) -> AudioEvent:
    if kind not in TONE_KINDS or action not in ("start", "stop"):
        raise ValueError(f"bad tone event {kind!r}/{action!r}")
    return AudioEvent(t, TONE, {"kind": kind, "action": action})


def beep_rate(t: int, interval_ms: int | None) -> AudioEvent:
    return AudioEvent(t, BEEP_RATE, {"interval_ms": interval_ms})


def write_event_log(events: list[AudioEvent], path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for ev in events:
            fh.write(ev.to_json())
            fh.write("\n")


def event_log_lines(events: list[AudioEvent]) -> list[str]:
    return [ev.to_json() for ev in events]


def parse_event_line(line: str) -> AudioEvent:
    obj = json.loads(line)
    t = obj.pop("t")
    typ = obj.pop("type")
    return AudioEvent(t, typ, obj)


def read_event_log(path: str) -> list[AudioEvent]:
    out = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if line:
                out.append(parse_event_line(line))
    return out


# ---------------------------------------------------------------------------
# Touch trace I/O (.trace.json)

def load_trace(path: str) -> list[TouchEvent]:
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    return parse_trace(raw)


def parse_trace(raw: dict) -> list[TouchEvent]:
    if not isinstance(raw, dict) or "events" not in raw:
        raise TraceError("trace root must be an object with an 'events' list")
    events = []
    last_t = -1
    for i, obj in enumerate(raw["events"]):
        try:
            ev = TouchEvent(int(obj["t"]), int(obj["p"]), str(obj["phase"]), float(obj["x"]), float(obj["y"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise TraceError(f"events[{i}]: malformed touch event") from exc
        if ev.phase not in (DOWN, MOVE, UP):
            raise TraceError(f"events[{i}]: bad phase {ev.phase!r}")
        if ev.time_ms < last_t:
            raise TraceError("non-monotonic trace")
        last_t = ev.time_ms
        events.append(ev)
    return events


def save_trace(events: list[TouchEvent], path: str) -> None:
    raw = {
        "events": [
            {"t": ev.time_ms, "p": ev.pointer_id, "phase": ev.phase, "x": round(ev.x, 9), "y": round(ev.y, 9)}
            for ev in events
        ]
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(raw, fh, separators=(",", ":"))
        fh.write("\n")
