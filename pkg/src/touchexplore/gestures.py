"""Touch-to-gesture classification.

Turns a well-ordered stream of raw pointer events into taps (1-3 taps,
1-2 fingers), button holds, and drag enter/exit transitions. No wall
clock is read: aggregation deadlines are evaluated against the
timestamps of later events, so classification is fully deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .config import TimingConfig
from .events import (DOWN, MOVE, UP, DragEnter, DragExit, Gesture, HoldEnd,
                     HoldStart, Tap, TouchEvent, TraceError)
from .model import AreaPath

HitTester = Callable[[float, float], Optional[AreaPath]]
ButtonLookup = Callable[[float, float], Optional[str]]


@dataclass
class _Pointer:
    down_t: int
    down_x: float
    down_y: float
    x: float
    y: float
    up: bool = False


@dataclass
class _PressGroup:
    start_t: int
    pointers: dict[int, _Pointer] = field(default_factory=dict)
    max_simultaneous: int = 1
    is_drag: bool = False
    button: str | None = None
    hold_fired: bool = False

    def all_up(self) -> bool:
        return all(p.up for p in self.pointers.values())

    def down_centroid(self) -> tuple[float, float]:
        xs = [p.down_x for p in self.pointers.values()]
        ys = [p.down_y for p in self.pointers.values()]
        return (sum(xs) / len(xs), sum(ys) / len(ys))


@dataclass
class _PendingTap:
    last_up_t: int
    tap_count: int
    finger_count: int
    x: float
    y: float


class GestureClassifier:
    """Stateful classifier; feed events in timestamp order.

    `hit` resolves a screen point to an area path at the caller's current
    level (already accounting for zoom and button masking); `buttons`
    resolves a point to a menu button region name, or None.
    """

    def __init__(self, config: TimingConfig, buttons: ButtonLookup | None = None):
        self.config = config
        self.buttons = buttons or (lambda x, y: None)
        self._last_t = -1
        self._group: _PressGroup | None = None
        self._pending: _PendingTap | None = None
        self._drag_path: AreaPath | None = None

    # -- public API ---------------------------------------------------------

    def feed(self, ev: TouchEvent, hit: HitTester) -> list[Gesture]:
        if ev.time_ms < self._last_t:
            raise TraceError("non-monotonic trace")
        self._last_t = ev.time_ms
        out: list[Gesture] = []
        self._flush_pending(ev.time_ms, out, incoming_down=(ev.phase == DOWN))
        self._check_hold(ev.time_ms, out)
        if ev.phase == DOWN:
            self._on_down(ev, hit, out)
        elif ev.phase == MOVE:
            self._on_move(ev, hit, out)
        elif ev.phase == UP:
            self._on_up(ev, out)
        else:
            raise TraceError(f"bad phase {ev.phase!r}")
        return out

    def finish(self, end_t: int | None = None) -> list[Gesture]:
        """Flush any pending tap at stream end."""
        out: list[Gesture] = []
        if self._pending is not None:
            p = self._pending
            out.append(Tap(p.last_up_t, p.finger_count, p.tap_count, p.x, p.y))
            self._pending = None
        return out

    def drag_in_progress(self) -> bool:
        g = self._group
        return g is not None and g.is_drag and not g.all_up()

    # -- internals ----------------------------------------------------------

    def _flush_pending(self, t: int, out: list[Gesture], incoming_down: bool) -> None:
        p = self._pending
        if p is None:
            return
        # A following tap must start within the gap window; any event at or
        # past the deadline settles the group (downs exactly at the deadline
        # still aggregate).
        deadline = p.last_up_t + self.config.multi_tap_gap_ms
        if t > deadline or (not incoming_down and t == deadline):
            out.append(Tap(p.last_up_t, p.finger_count, p.tap_count, p.x, p.y))
            self._pending = None

    def _check_hold(self, t: int, out: list[Gesture]) -> None:
        g = self._group
        if g is None or g.button is None or g.hold_fired or g.is_drag:
            return
        if g.all_up() or len(g.pointers) != 1:
            return
        if t - g.start_t >= self.config.hold_ms:
            g.hold_fired = True
            out.append(HoldStart(g.start_t + self.config.hold_ms, g.button))

    def _on_down(self, ev: TouchEvent, hit: HitTester, out: list[Gesture]) -> None:
        ptr = _Pointer(ev.time_ms, ev.x, ev.y, ev.x, ev.y)
        g = self._group
        if g is None or g.all_up():
            g = _PressGroup(start_t=ev.time_ms, button=self.buttons(ev.x, ev.y))
            self._group = g
            self._drag_path = None
        g.pointers[ev.pointer_id] = ptr
        active = sum(1 for p in g.pointers.values() if not p.up)
        g.max_simultaneous = max(g.max_simultaneous, active)
        if active > 1:
            # Multi-finger presses never drag-announce; drop any transition.
            self._end_drag(ev.time_ms, out)

    def _on_move(self, ev: TouchEvent, hit: HitTester, out: list[Gesture]) -> None:
        g = self._group
        if g is None or ev.pointer_id not in g.pointers:
            return
        ptr = g.pointers[ev.pointer_id]
        ptr.x, ptr.y = ev.x, ev.y
        disp = max(abs(ev.x - ptr.down_x), abs(ev.y - ptr.down_y))
        if disp >= self.config.slop:
            g.is_drag = True
            g.button = None  # a moved button press is no longer a hold candidate
        active = sum(1 for p in g.pointers.values() if not p.up)
        if active == 1 and g.button is None:
            self._enter_drag_mode_if_needed(ev.time_ms, ev.x, ev.y, hit, out)

    def _enter_drag_mode_if_needed(self, t: int, x: float, y: float, hit: HitTester,
                                   out: list[Gesture]) -> None:
        g = self._group
        assert g is not None
        if t - g.start_t > self.config.tap_max_ms:
            g.is_drag = True
        if not g.is_drag:
            return
        new_path = hit(x, y)
        if new_path != self._drag_path:
            if self._drag_path is not None:
                out.append(DragExit(t, self._drag_path))
            if new_path is not None:
                out.append(DragEnter(t, new_path))
            self._drag_path = new_path

    def _end_drag(self, t: int, out: list[Gesture]) -> None:
        if self._drag_path is not None:
            out.append(DragExit(t, self._drag_path))
            self._drag_path = None

    def _on_up(self, ev: TouchEvent, out: list[Gesture]) -> None:
        g = self._group
        if g is None or ev.pointer_id not in g.pointers:
            return
        ptr = g.pointers[ev.pointer_id]
        if ptr.up:
            return
        ptr.x, ptr.y = ev.x, ev.y
        ptr.up = True
        if not g.all_up():
            return
        # Whole press group ended; classify it.
        duration = ev.time_ms - g.start_t
        if g.hold_fired:
            out.append(HoldEnd(ev.time_ms, g.button or ""))
        elif not g.is_drag and duration <= self.config.tap_max_ms:
            self._register_tap(g, ev.time_ms, out)
        self._end_drag(ev.time_ms, out)

    def _register_tap(self, g: _PressGroup, up_t: int, out: list[Gesture]) -> None:
        fingers = min(2, g.max_simultaneous)
        x, y = g.down_centroid()
        p = self._pending
        if p is not None and g.start_t - p.last_up_t <= self.config.multi_tap_gap_ms:
            p.tap_count += 1
            p.finger_count = max(p.finger_count, fingers)
            p.last_up_t = up_t
            p.x, p.y = x, y
        else:
            if p is not None:
                out.append(Tap(p.last_up_t, p.finger_count, p.tap_count, p.x, p.y))
            p = _PendingTap(up_t, 1, fingers, x, y)
            self._pending = p
        if p.tap_count >= 3:
            out.append(Tap(p.last_up_t, p.finger_count, 3, p.x, p.y))
            self._pending = None


def classify(raw: list[TouchEvent], config: TimingConfig,
             hit: HitTester | None = None,
             buttons: ButtonLookup | None = None) -> list[Gesture]:
    """Classify a complete trace with a fixed hit-tester (no engine in the
    loop). Convenience entry point for tests and tools."""
    clf = GestureClassifier(config, buttons)
    hit = hit or (lambda x, y: None)
    out: list[Gesture] = []
    for ev in raw:
        out.extend(clf.feed(ev, hit))
    out.extend(clf.finish())
    return out
