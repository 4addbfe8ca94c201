"""Session metrics: coverage, duration, menu-scroll histogram, beacons.

Metrics are computed online during replay from engine counters, and can
be recomputed offline from the replay artifacts (event log + trace +
annotation) by an independent parser; the two must agree.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .config import EngineConfig, rect_contains
from .engine import Engine
from .events import AudioEvent, TouchEvent
from .model import AnnotatedImage, AreaPath


@dataclass
class SessionMetrics:
    coverage_pct: float
    duration_ms: int
    menu_scrolls_by_decile: list[int]
    beacons_placed: int

    def to_dict(self) -> dict:
        return {
            "coverage_pct": round(self.coverage_pct, 6),
            "duration_ms": self.duration_ms,
            "menu_scrolls_by_decile": self.menu_scrolls_by_decile,
            "beacons_placed": self.beacons_placed,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":")) + "\n"


def _decile_bins(times: list[int], duration: int) -> list[int]:
    bins = [0] * 10
    for t in times:
        if duration <= 0:
            bins[0] += 1
        else:
            bins[min(9, t * 10 // duration)] += 1
    return bins


def compute_metrics(image: AnnotatedImage, engine: Engine, trace: list[TouchEvent]) -> SessionMetrics:
    total = len(image.all_paths())
    touched = len(engine.state.touched_once)
    duration = trace[-1].time_ms if trace else 0
    top_scrolls = [t for t, at_top in engine.stats.scroll_presses if at_top]
    return SessionMetrics(
        coverage_pct=(100.0 * touched / total) if total else 0.0,
        duration_ms=duration,
        menu_scrolls_by_decile=_decile_bins(top_scrolls, duration),
        beacons_placed=engine.stats.beacons_placed,
    )


# ---------------------------------------------------------------------------
# Offline recomputation. This is a deliberately separate, simplified parser
# over the replay artifacts; it shares no state with the engine.

def _taps_from_trace(trace: list[TouchEvent], config: EngineConfig) -> list[tuple[int, float, float, int]]:
    """(up_time, x, y, press_ms) for each single-finger press that stayed
    within the tap slop. Long presses are included (press_ms tells holds
    apart from taps)."""
    taps = []
    open_presses: dict[int, TouchEvent] = {}
    moved: set[int] = set()
    for ev in trace:
        if ev.phase == "down":
            open_presses[ev.pointer_id] = ev
            moved.discard(ev.pointer_id)
        elif ev.phase == "move" and ev.pointer_id in open_presses:
            d = open_presses[ev.pointer_id]
            if max(abs(ev.x - d.x), abs(ev.y - d.y)) >= config.timing.slop:
                moved.add(ev.pointer_id)
        elif ev.phase == "up" and ev.pointer_id in open_presses:
            d = open_presses.pop(ev.pointer_id)
            if ev.pointer_id not in moved and len(open_presses) == 0:
                taps.append((ev.time_ms, d.x, d.y, ev.time_ms - d.time_ms))
    return taps


def metrics_from_artifacts(image: AnnotatedImage, trace: list[TouchEvent],
                           log: list[AudioEvent], config: EngineConfig | None = None) -> SessionMetrics:
    """Recompute SessionMetrics from replay outputs without the engine."""
    config = config or EngineConfig()
    duration = trace[-1].time_ms if trace else 0
    taps = _taps_from_trace(trace, config)
    open_taps = {t for t, x, y, ms in taps
                 if ms <= config.timing.tap_max_ms and rect_contains(config.menu_beacon.open_button, x, y)}
    scroll_taps = sorted(t for t, x, y, ms in taps
                         if ms <= config.timing.tap_max_ms and rect_contains(config.menu_beacon.scroll_button, x, y))

    beacons = sum(1 for ev in log if ev.type == "speech" and ev.payload["text"] == "in beacon mode")

    # Level tracking from speech: "Entered <label>" descends; an unexplored-
    # count announcement not caused by a menu open returns to the top.
    top_by_label = {a.label: (i,) for i, a in enumerate(image.areas)}
    level: AreaPath | None = None
    touched: set[AreaPath] = set()
    menu_open_since: int | None = None
    scroll_top_times: list[int] = []

    def labels_at_level() -> dict[str, AreaPath]:
        if level is None:
            return dict(top_by_label)
        parent = image.area_at(level)
        return {s.label: level + (j,) for j, s in enumerate(parent.sub_areas)}

    for ev in log:
        if ev.type != "speech":
            continue
        text = ev.payload["text"]
        if text.startswith("Entered "):
            label = text[len("Entered "):]
            level = top_by_label.get(label, level)
            menu_open_since = None
            continue
        if text.endswith("unexplored area") or text.endswith("unexplored areas"):
            if text != "no more unexplored areas" and ev.time_ms in open_taps:
                menu_open_since = ev.time_ms
            elif text != "no more unexplored areas":
                level = None
                menu_open_since = None
            continue
        if text == "in beacon mode":
            menu_open_since = None
            continue
        if text.startswith("arrived at "):
            label = text[len("arrived at "):]
            path = labels_at_level().get(label)
            if path is not None:
                touched.add(path)
            continue
        base = text.split(". Double-tap to explore")[0]
        path = labels_at_level().get(base)
        if path is not None and menu_open_since is None:
            touched.add(path)

    # Scroll presses count while the menu is open; bin the top-level ones.
    open_events = sorted([(t, "open") for t in open_taps]
                         + [(ev.time_ms, "close") for ev in log if ev.type == "speech"
                            and ev.payload["text"] in ("in beacon mode",)]
                         + [(ev.time_ms, "enter") for ev in log if ev.type == "speech"
                            and ev.payload["text"].startswith("Entered ")])

    def menu_open_at(t: int) -> bool:
        state = False
        for et, kind in open_events:
            if et > t:
                break
            state = kind == "open"
        return state

    # Top-level intervals derived from enter/exit announcements.
    transitions = []
    for ev in log:
        if ev.type != "speech":
            continue
        text = ev.payload["text"]
        if text.startswith("Entered "):
            transitions.append((ev.time_ms, False))
        elif (text.endswith("unexplored areas") or text.endswith("unexplored area")) \
                and text != "no more unexplored areas" and ev.time_ms not in open_taps:
            transitions.append((ev.time_ms, True))

    def at_top(t: int) -> bool:
        state = True
        for tt, is_top in transitions:
            if tt > t:
                break
            state = is_top
        return state

    for t in scroll_taps:
        if menu_open_at(t) and at_top(t):
            scroll_top_times.append(t)

    # Expand touched into the explored closure only for counting coverage of
    # touched areas (coverage counts touches, not exploredness).
    total = len(image.all_paths())
    return SessionMetrics(
        coverage_pct=(100.0 * len(touched) / total) if total else 0.0,
        duration_ms=duration,
        menu_scrolls_by_decile=_decile_bins(scroll_top_times, duration),
        beacons_placed=beacons,
    )
