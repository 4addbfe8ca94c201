#!/usr/bin/env python3
"""Regenerate the golden traces and event logs in samples/golden/.

Each bundled sample gets one scripted touch session exercising a
different tool mix. The resulting `.events.jsonl` files are frozen
reference outputs: regenerating them should be a deliberate act, after
reviewing the diff event by event.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from touchexplore.events import TouchEvent, save_trace, write_event_log
from touchexplore.model import load_annotation
from touchexplore.session import parse_tools, replay

ROOT = Path(__file__).resolve().parents[1]
GOLDEN = ROOT / "samples" / "golden"


class Script:
    """Touch-trace builder with timings that classify unambiguously."""

    def __init__(self):
        self.t = 0
        self.events: list[TouchEvent] = []

    def _emit(self, phase, x, y, p=0):
        self.events.append(TouchEvent(time_ms=self.t, pointer_id=p, phase=phase, x=x, y=y))

    def drag(self, points, dt=60):
        x0, y0 = points[0]
        self._emit("down", x0, y0)
        self.t += 260
        self._emit("move", x0, y0)
        for x, y in points[1:]:
            self.t += dt
            self._emit("move", x, y)
        self.t += dt
        self._emit("up", *points[-1])
        self.t += 400
        return self

    def tap(self, x, y, n=1):
        for i in range(n):
            self._emit("down", x, y)
            self.t += 60
            self._emit("up", x, y)
            if i < n - 1:
                self.t += 120
        self.t += 400
        return self

    def two_finger_tap(self, x, y, n=1):
        for i in range(n):
            self._emit("down", x, y, p=0)
            self.t += 10
            self._emit("down", x + 0.015, y, p=1)
            self.t += 60
            self._emit("up", x, y, p=0)
            self.t += 5
            self._emit("up", x + 0.015, y, p=1)
            if i < n - 1:
                self.t += 120
        self.t += 400
        return self

    def hold(self, x, y, duration_ms=600):
        self._emit("down", x, y)
        self.t += duration_ms
        self._emit("up", x, y)
        self.t += 400
        return self


OPEN = (0.09, 0.05)
SCROLL = (0.09, 0.95)


def painting_script():
    # all tools: baseline drags, enter/exit, menu, beacon, zoom with bleed
    s = Script()
    s.drag([(0.26, 0.40), (0.30, 0.40)])  # curtain
    s.drag([(0.44, 0.50), (0.45, 0.50)])  # woman by the window (parent)
    s.tap(0.44, 0.50, 2)  # enter
    s.drag([(0.44, 0.36), (0.44, 0.12), (0.44, 0.50)])  # headdress, off-area tone, back
    s.tap(0.44, 0.50, 3)  # exit with count
    s.tap(*OPEN).tap(*SCROLL).hold(*SCROLL)  # beacon on "artist"
    s.drag([(0.88, 0.60), (0.80, 0.60), (0.72, 0.60)])  # guided approach, arrival
    s.two_finger_tap(0.75, 0.25, 2)  # zoom into top right
    s.drag([(0.30, 0.20), (0.04, 0.20), (0.30, 0.20)])  # chandelier bleed in/out
    s.two_finger_tap(0.75, 0.25, 3)  # zoom out
    return s.events


def greenway_script():
    # menu_beacon + hints: ordering, sub counts, wrap, beacon, first-touch
    s = Script()
    s.tap(*OPEN)
    for _ in range(6):  # 5 entries + wrap back to the first
        s.tap(*SCROLL)
    s.tap(*OPEN).tap(*SCROLL).hold(*SCROLL)  # beacon on "picnic group"
    s.drag([(0.80, 0.20), (0.70, 0.30), (0.60, 0.45), (0.52, 0.60)])  # arrival
    s.drag([(0.75, 0.67), (0.76, 0.67)])  # cyclist: first-touch earcon
    s.drag([(0.75, 0.67), (0.76, 0.67)])  # second touch: no earcon
    return s.events


def newsprint_script():
    # no tools: pure baseline including the completion announcement
    s = Script()
    s.drag([(0.50, 0.10), (0.55, 0.10)])  # city backdrop
    s.drag([(0.47, 0.40), (0.48, 0.40)])  # man in a hat (parent)
    s.tap(0.47, 0.40, 2)
    s.drag([(0.47, 0.30), (0.47, 0.60)])  # hat, overcoat
    s.tap(0.47, 0.40, 3)  # exit: 1 unexplored area left
    s.drag([(0.78, 0.70), (0.79, 0.70)])  # newspaper stand
    s.tap(0.78, 0.70, 2)
    s.drag([(0.78, 0.50), (0.79, 0.50)])  # headline board -> coverage complete
    s.tap(0.78, 0.70, 3)  # exit: no count speech after completion
    return s.events


def floorplan_script():
    # menu_beacon + quadrant_zoom: zoomed menu, zoomed beacon, zoomed entry
    s = Script()
    s.two_finger_tap(0.25, 0.25, 2)  # zoom into top left
    s.tap(*OPEN)  # only areas intersecting the quadrant are listed
    s.tap(*SCROLL).hold(*SCROLL)  # beacon on "living room"
    s.drag([(0.95, 0.95), (0.90, 0.85)])  # short guided approach, arrival
    s.tap(0.70, 0.50, 2)  # enter living room
    s.drag([(0.60, 0.30), (0.62, 0.30)])  # sofa (screen coords, zoomed)
    s.tap(0.70, 0.50, 3)  # exit
    s.two_finger_tap(0.25, 0.25, 3)  # zoom out
    s.drag([(0.88, 0.57), (0.89, 0.57)])  # closet, small top-level leaf
    return s.events


SESSIONS = [
    ("painting", "all", painting_script),
    ("greenway", "menu_beacon,hints", greenway_script),
    ("newsprint", "none", newsprint_script),
    ("floorplan", "menu_beacon,quadrant_zoom", floorplan_script),
]


def main() -> int:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    manifest = []
    for name, tools_spec, script in SESSIONS:
        image, issues = load_annotation(ROOT / "samples" / f"{name}.annot.json")
        assert not any(i.severity == "error" for i in issues)
        trace = script()
        audio, metrics = replay(image, trace, parse_tools(tools_spec))
        trace_path = GOLDEN / f"{name}.trace.json"
        log_path = GOLDEN / f"{name}.events.jsonl"
        save_trace(trace, trace_path)
        write_event_log(audio, log_path)
        manifest.append(
            {
                "annot": f"../{name}.annot.json",
                "trace": trace_path.name,
                "tools": tools_spec,
                "log": log_path.name,
            }
        )
        print(f"{name}: {len(trace)} touch events -> {len(audio)} audio events, "
              f"coverage {metrics.coverage_pct:.1f}%")
    with open(GOLDEN / "manifest.json", "w", encoding="utf-8") as fh:
        json.dump(manifest, fh, indent=2)
        fh.write("\n")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
