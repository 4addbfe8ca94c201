"""Synthetic exploration strategies.

Human sessions are not reproducible, so these strategies exercise the
same qualitative contrasts mechanically: a boustrophedon grid scan
(baseline-style surveying) and a menu+beacon-guided search that follows
the beacon's own directional announcements.
"""

from __future__ import annotations

import math

from .config import EngineConfig
from .engine import Engine
from .events import DOWN, MOVE, UP, AudioEvent, TouchEvent
from .menu import DIRECTION_NAMES, MAX_DISTANCE
from .metrics import SessionMetrics, compute_metrics
from .model import AnnotatedImage

# Unit vectors for the 8 spoken directions, indexed like DIRECTION_NAMES.
_DIAG = math.sqrt(0.5)
_DIRECTION_VECTORS = (
    (1.0, 0.0),
    (_DIAG, _DIAG),
    (0.0, 1.0),
    (-_DIAG, _DIAG),
    (-1.0, 0.0),
    (-_DIAG, -_DIAG),
    (0.0, -1.0),
    (_DIAG, -_DIAG),
)


class StrategyError(RuntimeError):
    pass


class _Sim:
    """Closed-loop driver: emits touch events into a live engine and
    watches the audio it produces."""

    MOVE_DT = 20

    def __init__(self, image: AnnotatedImage, tools: frozenset, config: EngineConfig | None = None):
        self.image = image
        self.config = config or EngineConfig()
        self.engine = Engine(image, tools, self.config)
        self.trace: list[TouchEvent] = []
        self.audio: list[AudioEvent] = []
        self.t = 0
        self._drained = 0
        self._pen: tuple[float, float] | None = None

    # -- low-level event emission ------------------------------------------

    def _emit(self, phase: str, x: float, y: float) -> None:
        ev = TouchEvent(self.t, 0, phase, x, y)
        self.trace.append(ev)
        self.audio.extend(self.engine.handle_touch(ev))

    def pen_down(self, x: float, y: float, settle: bool = True) -> None:
        self._emit(DOWN, x, y)
        if settle:
            # A stationary second sample past the tap window forces drag
            # classification so the landing point announces.
            self.t += self.config.timing.tap_max_ms + 10
            self._emit(MOVE, x, y)
        self._pen = (x, y)

    def pen_move(self, x: float, y: float, dt: int | None = None) -> None:
        self.t += dt if dt is not None else self.MOVE_DT
        self._emit(MOVE, x, y)
        self._pen = (x, y)

    def pen_up(self) -> None:
        """Lift the pen. Always lingers past the tap window first so a short
        guided stroke (e.g. instant beacon arrival) never classifies as a
        tap that would merge into the next tap group."""
        assert self._pen is not None
        self.t += self.config.timing.tap_max_ms + 10
        self._emit(UP, *self._pen)
        self._pen = None

    def tap(self, x: float, y: float, count: int = 1) -> None:
        """`count` quick taps, then a pause so the group settles before the
        next action."""
        self.t += self.config.timing.multi_tap_gap_ms + 100
        for i in range(count):
            if i:
                self.t += 120
            self._emit(DOWN, x, y)
            self.t += 50
            self._emit(UP, x, y)
        self.t += self.config.timing.multi_tap_gap_ms + 100
        # Flush the pending tap group deterministically at stream end or on
        # the next event; nudge with a throwaway long press when idle.
        self._emit(DOWN, x, y)
        self.t += self.config.timing.tap_max_ms + 10
        self._emit(UP, x, y)

    def drain(self) -> list[AudioEvent]:
        new = self.audio[self._drained:]
        self._drained = len(self.audio)
        return new

    def finish(self) -> None:
        if self._pen is not None:
            self.pen_up()
        self.audio.extend(self.engine.finish())

    def result(self) -> tuple[list[TouchEvent], list[AudioEvent], SessionMetrics]:
        return self.trace, self.audio, compute_metrics(self.image, self.engine, self.trace)


def _speech_texts(events: list[AudioEvent]) -> list[str]:
    return [e.payload["text"] for e in events if e.type == "speech"]


# ---------------------------------------------------------------------------
# Grid strategy

def _scan_rows(pitch: float) -> list[list[tuple[float, float]]]:
    rows = []
    y = pitch / 2.0
    k = 0
    while y < 1.0:
        xs = []
        x = 0.002
        while x < 1.0:
            xs.append(min(x, 0.998))
            x += pitch
        if 0.998 not in xs:
            xs.append(0.998)
        if k % 2:
            xs.reverse()
        rows.append([(x, y) for x in xs])
        y += pitch
        k += 1
    return rows


def simulate_grid(image: AnnotatedImage, pitch: float, tools: frozenset = frozenset(),
                  config: EngineConfig | None = None):
    """Boustrophedon scan at the given row pitch; any parent announced
    with sub-areas is entered, scanned at the same pitch, and left again
    before the outer scan resumes."""
    if not (0.0 < pitch < 1.0):
        raise ValueError("pitch must be in (0, 1)")
    sim = _Sim(image, tools, config)
    entered: set[str] = set()

    def enter_prompt(texts: list[str]) -> str | None:
        for text in texts:
            if text.endswith(". Double-tap to explore"):
                label = text[: -len(". Double-tap to explore")]
                if label not in entered:
                    return label
        return None

    def scan(allow_enter: bool) -> None:
        points = [p for row in _scan_rows(pitch) for p in row]
        i = 0
        while i < len(points):
            x, y = points[i]
            if sim._pen is None:
                sim.pen_down(x, y)
            else:
                sim.pen_move(x, y)
            label = enter_prompt(_speech_texts(sim.drain())) if allow_enter else None
            if label is not None:
                entered.add(label)
                sim.pen_up()
                sim.tap(x, y, 2)  # enter the announced parent
                sim.drain()
                scan(allow_enter=False)
                sim.tap(0.5, 0.5, 3)  # back to the top level
                sim.drain()
            i += 1
        if sim._pen is not None:
            sim.pen_up()

    scan(allow_enter=True)
    sim.finish()
    return sim.result()


# ---------------------------------------------------------------------------
# Beacon-guided strategy

def simulate_beacon_guided(image: AnnotatedImage, tools: frozenset = frozenset({"menu_beacon"}),
                           config: EngineConfig | None = None):
    """Menu-driven search: open the menu, target the first unexplored
    entry, follow the beacon announcements in small straight-line steps
    until arrival; descend into parents the same way. Stops when the menu
    reports zero unexplored areas at the top level."""
    if "menu_beacon" not in tools:
        raise ValueError("beacon_guided requires the menu_beacon tool")
    sim = _Sim(image, tools, config)
    cfg = sim.config.menu_beacon
    open_x, open_y = 0.09, 0.05
    scroll_x, scroll_y = 0.09, 0.95

    def open_menu() -> int:
        sim.tap(open_x, open_y)
        for text in _speech_texts(sim.drain()):
            if text.endswith("unexplored areas") or text.endswith("unexplored area"):
                if text == "no more unexplored areas":
                    return 0
                return int(text.split(" ")[0])
        raise StrategyError("menu did not announce an unexplored count")

    def activate_beacon() -> None:
        sim.tap(scroll_x, scroll_y)  # select the first (unexplored) entry
        sim._emit(DOWN, scroll_x, scroll_y)
        sim.t += sim.config.timing.hold_ms + 40
        sim._emit(MOVE, scroll_x, scroll_y)
        sim.t += 20
        sim._emit(UP, scroll_x, scroll_y)
        texts = _speech_texts(sim.drain())
        if "in beacon mode" not in texts:
            raise StrategyError(f"beacon did not activate: {texts}")

    def follow_beacon() -> str:
        x, y = 0.6, 0.5
        direction = None
        last_interval: int | None = None
        sim.pen_down(x, y, settle=False)
        for _ in range(5000):
            for ev in sim.drain():
                if ev.type == "speech":
                    text = ev.payload["text"]
                    if text.startswith("arrived at "):
                        sim.pen_up()
                        sim.drain()
                        return text[len("arrived at "):]
                    if text in DIRECTION_NAMES:
                        direction = DIRECTION_NAMES.index(text)
                elif ev.type == "beep_rate" and ev.payload["interval_ms"] is not None:
                    last_interval = ev.payload["interval_ms"]
            if direction is None:
                raise StrategyError("beacon gave no direction")
            # Estimate remaining distance from the beep interval so the
            # step never overshoots a small target.
            step = 0.02
            if last_interval is not None:
                frac = (last_interval - cfg.min_interval_ms) / (cfg.max_interval_ms - cfg.min_interval_ms)
                step = max(0.002, min(0.02, frac * MAX_DISTANCE))
            dx, dy = _DIRECTION_VECTORS[direction]
            x = min(0.998, max(0.19, x + dx * step))
            y = min(0.998, max(0.002, y + dy * step))
            sim.pen_move(x, y, dt=cfg.announce_period_ms)
        raise StrategyError("beacon guidance did not converge")

    def explore_level(depth: int) -> None:
        for _ in range(10 * (len(image.all_paths()) + 1)):
            if open_menu() == 0:
                return
            activate_beacon()
            label = follow_beacon()
            if depth == 0:
                entered = False
                sim.tap(0.6, 0.5, 2)  # try to enter; leaves ignore this
                entered = any(t.startswith("Entered ") for t in _speech_texts(sim.drain()))
                if entered:
                    explore_level(1)
                    sim.tap(0.6, 0.5, 3)
                    sim.drain()
        raise StrategyError(f"level did not finish exploring (depth {depth})")

    explore_level(0)
    sim.finish()
    return sim.result()
