"""The exploration state machine.

Consumes touch events (via the gesture classifier) and emits symbolic
audio events. Baseline behavior: announce areas under the dragging
finger, double-tap to enter an area with sub-areas, triple-tap to leave,
warning tone off the entered parent, unexplored-count announcements.
The menu/beacon, hints, and quadrant-zoom tools extend this; gestures
are offered to the tools in a fixed order (zoom, beacon, menu, core) and
the first consumer wins.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import hints as hints_mod
from . import menu as menu_mod
from . import zoom as zoom_mod
from .config import EngineConfig, rect_contains
from .events import (AudioEvent, DragEnter, DragExit, Gesture, HoldEnd,
                     HoldStart, Tap, TouchEvent, beep_rate, earcon, speech,
                     tone)
from .gestures import GestureClassifier
from .geometry import point_in_polygon, polygon_centroid
from .hints import ProminenceTable
from .menu import BeaconState, MenuState
from .model import AnnotatedImage, AreaPath, hit_test
from .zoom import ZoomState

MENU_BEACON, HINTS, QUADRANT_ZOOM = "menu_beacon", "hints", "quadrant_zoom"
ALL_TOOLS = frozenset({MENU_BEACON, HINTS, QUADRANT_ZOOM})

BLEED_WARNING_TEXT = "continues beyond this quadrant — zoom out to explore"


def recompute_explored(image: AnnotatedImage, touched: set[AreaPath]) -> set[AreaPath]:
    """From-scratch explored closure: leaves are explored when touched; a
    parent with sub-areas is explored when all of them are."""
    explored: set[AreaPath] = set()
    for i, area in enumerate(image.areas):
        if not area.sub_areas:
            if (i,) in touched:
                explored.add((i,))
            continue
        subs = [(i, j) for j in range(len(area.sub_areas))]
        for p in subs:
            if p in touched:
                explored.add(p)
        if all(p in touched for p in subs):
            explored.add((i,))
    return explored


@dataclass
class SessionStats:
    """Counters the metrics harness reads after a replay."""
    scroll_presses: list[tuple[int, bool]] = field(default_factory=list)  # (time_ms, at_top_level)
    beacons_placed: int = 0


@dataclass
class ExplorationState:
    level: AreaPath | None = None  # None = top level, else entered parent path
    explored: set[AreaPath] = field(default_factory=set)
    touched_once: set[AreaPath] = field(default_factory=set)
    menu: MenuState = field(default_factory=MenuState)
    beacon: BeaconState | None = None
    zoom: ZoomState | None = None
    enabled_tools: frozenset = frozenset()
    last_announced_top: AreaPath | None = None
    off_area_tone_on: bool = False
    completion_announced: bool = False


class Engine:
    def __init__(self, image: AnnotatedImage, tools: frozenset | set = frozenset(),
                 config: EngineConfig | None = None):
        self.image = image
        self.config = config or EngineConfig()
        self.state = ExplorationState(enabled_tools=frozenset(tools))
        self.stats = SessionStats()
        self.classifier = GestureClassifier(self.config.timing, self._button_at)
        self.prominence: ProminenceTable | None = None
        if HINTS in self.state.enabled_tools and image.cam is not None:
            self.prominence = hints_mod.bake_prominence(image)
        self._pointers: dict[int, tuple[float, float]] = {}

    # -- tool predicates ------------------------------------------------------

    def _menu_enabled(self) -> bool:
        return MENU_BEACON in self.state.enabled_tools

    def _hints_enabled(self) -> bool:
        return HINTS in self.state.enabled_tools

    def _zoom_enabled(self) -> bool:
        return QUADRANT_ZOOM in self.state.enabled_tools

    # -- coordinate / lookup helpers -----------------------------------------

    def _button_at(self, x: float, y: float) -> str | None:
        if not self._menu_enabled():
            return None
        mb = self.config.menu_beacon
        if rect_contains(mb.open_button, x, y):
            return "open_button"
        if rect_contains(mb.scroll_button, x, y):
            return "scroll_button"
        return None

    def _to_image(self, x: float, y: float) -> tuple[float, float]:
        if self.state.zoom is not None:
            return zoom_mod.to_image_coords(self.state.zoom.quadrant, (x, y))
        return (x, y)

    def _hit_screen(self, x: float, y: float) -> AreaPath | None:
        """Hit-test a screen point at the current level; button regions
        never resolve to areas."""
        if self._button_at(x, y) is not None:
            return None
        px, py = self._to_image(x, y)
        return hit_test(self.image, (px, py), self.state.level)

    def _level_paths(self) -> list[AreaPath]:
        return self.image.level_paths(self.state.level)

    def _visible_level_paths(self) -> list[AreaPath]:
        """Level paths, restricted to the active quadrant while zoomed."""
        paths = self._level_paths()
        if self.state.zoom is not None:
            q = self.state.zoom.quadrant
            paths = [p for p in paths if zoom_mod.polygon_intersects_quadrant(self.image.area_at(p), q)]
        return paths

    def unexplored_count(self) -> int:
        return sum(1 for p in self._visible_level_paths() if p not in self.state.explored)

    # -- touch entry point -----------------------------------------------------

    def handle_touch(self, ev: TouchEvent) -> list[AudioEvent]:
        out: list[AudioEvent] = []
        for g in self.classifier.feed(ev, self._hit_screen):
            out.extend(self.step(g))
        if ev.phase == "down":
            self._pointers[ev.pointer_id] = (ev.x, ev.y)
        elif ev.phase == "move" and ev.pointer_id in self._pointers:
            self._pointers[ev.pointer_id] = (ev.x, ev.y)
        elif ev.phase == "up":
            self._pointers.pop(ev.pointer_id, None)

        if ev.phase in ("down", "move") and len(self._pointers) == 1:
            out.extend(self._on_finger_position(ev.time_ms, ev.x, ev.y))
        elif ev.phase == "up" and not self._pointers:
            out.extend(self._on_finger_lift(ev.time_ms))
        return out

    def finish(self, end_t: int | None = None) -> list[AudioEvent]:
        out: list[AudioEvent] = []
        for g in self.classifier.finish(end_t):
            out.extend(self.step(g))
        return out

    # -- gesture dispatch -------------------------------------------------------

    def step(self, g: Gesture) -> list[AudioEvent]:
        if isinstance(g, Tap):
            return self._on_tap(g)
        if isinstance(g, HoldStart):
            return self._on_hold(g)
        if isinstance(g, DragEnter):
            return self._on_drag_enter(g)
        if isinstance(g, (DragExit, HoldEnd)):
            return []
        return []

    def _on_tap(self, g: Tap) -> list[AudioEvent]:
        if g.finger_count == 2:
            if g.tap_count == 2:
                return self._zoom_in(g)
            if g.tap_count == 3:
                return self._zoom_out(g.time_ms)
            return []
        button = self._button_at(g.x, g.y)
        if button is not None:
            out: list[AudioEvent] = []
            for _ in range(g.tap_count):
                out.extend(self._press_button(g.time_ms, button))
            return out
        if g.tap_count == 2:
            return self._enter_area(g.time_ms)
        if g.tap_count == 3:
            return self._exit_area(g.time_ms)
        return []

    # -- baseline behaviors -------------------------------------------------------

    def _on_drag_enter(self, g: DragEnter) -> list[AudioEvent]:
        st = self.state
        if st.beacon is not None:
            # The beacon consumes drags: no announcements and no touch
            # credit until the finger actually arrives at the target.
            return []
        area = self.image.area_at(g.path)
        out: list[AudioEvent] = []
        text = area.label
        if area.has_subs() and len(g.path) == 1:
            text += ". Double-tap to explore"
        volume = 1.0
        if self._hints_enabled() and self.prominence is not None:
            volume = hints_mod.speech_volume(self.prominence, g.path, self.config.hints)
        sp = speech(g.time_ms, text, volume, "primary")
        if self._hints_enabled():
            out.extend(hints_mod.first_touch_decorate(st.touched_once, g.path, sp))
        else:
            out.append(sp)
        if len(g.path) == 1:
            st.last_announced_top = g.path
        out.extend(self._mark_touched(g.time_ms, g.path))
        return out

    def _mark_touched(self, t: int, path: AreaPath) -> list[AudioEvent]:
        st = self.state
        st.touched_once.add(path)
        st.explored = recompute_explored(self.image, st.touched_once)
        out: list[AudioEvent] = []
        if not st.completion_announced:
            top = [(i,) for i in range(len(self.image.areas))]
            if top and all(p in st.explored for p in top):
                st.completion_announced = True
                out.append(speech(t, "no more unexplored areas"))
        return out

    def _enter_area(self, t: int) -> list[AudioEvent]:
        st = self.state
        if st.level is not None or st.last_announced_top is None:
            return []
        area = self.image.area_at(st.last_announced_top)
        if not area.has_subs():
            return []
        st.level = st.last_announced_top
        out = self._reset_level_ui(t)
        out.append(speech(t, f"Entered {area.label}"))
        return out

    def _exit_area(self, t: int) -> list[AudioEvent]:
        st = self.state
        if st.level is None:
            return []
        st.level = None
        st.last_announced_top = None
        out = self._reset_level_ui(t)
        if st.off_area_tone_on:
            st.off_area_tone_on = False
            out.append(tone(t, "off_area_warning", "stop"))
        n = self.unexplored_count()
        if n > 0:
            out.append(speech(t, menu_mod.unexplored_phrase(n)))
        return out

    def _reset_level_ui(self, t: int) -> list[AudioEvent]:
        """Level changes invalidate the menu and any active beacon."""
        st = self.state
        out: list[AudioEvent] = []
        st.menu = MenuState()
        if st.beacon is not None:
            st.beacon = None
            out.append(beep_rate(t, None))
        return out

    # -- menu & beacon -----------------------------------------------------------

    def _press_button(self, t: int, button: str) -> list[AudioEvent]:
        st = self.state
        if button == "open_button":
            entries = menu_mod.build_menu(self.image, self._visible_level_paths(),
                                          st.explored, self._hints_enabled())
            st.menu = MenuState(open=True, entries=entries, cursor=-1)
            n = sum(1 for e in entries if not e.explored)
            # the completion phrase is reserved for the moment coverage hits
            # 100%; at the menu we always announce a plain count
            text = "0 unexplored areas" if n == 0 else menu_mod.unexplored_phrase(n)
            return [speech(t, text)]
        if button == "scroll_button":
            if not st.menu.open or not st.menu.entries:
                return []
            self.stats.scroll_presses.append((t, st.level is None))
            out: list[AudioEvent] = []
            st.menu.cursor += 1
            if st.menu.cursor >= len(st.menu.entries):
                st.menu.cursor = 0
                out.append(earcon(t, "menu_wrap"))
            entry = st.menu.entries[st.menu.cursor]
            voice = "secondary" if entry.explored else "primary"
            out.append(speech(t, menu_mod.entry_utterance(entry, self._hints_enabled()), 1.0, voice))
            return out
        return []

    def _on_hold(self, g: HoldStart) -> list[AudioEvent]:
        st = self.state
        if g.region != "scroll_button" or not self._menu_enabled():
            return []
        if st.beacon is not None:
            st.beacon = None
            return [speech(g.time_ms, "beacon canceled"), beep_rate(g.time_ms, None)]
        if not st.menu.open or st.menu.cursor < 0:
            return []
        entry = st.menu.entries[st.menu.cursor]
        area = self.image.area_at(entry.path)
        target = polygon_centroid(area.polygon)
        if st.zoom is not None:
            x0, y0, x1, y1 = zoom_mod.quadrant_rect(st.zoom.quadrant)
            if not (x0 <= target[0] <= x1 and y0 <= target[1] <= y1):
                return [speech(g.time_ms, "target outside zoomed quadrant")]
        st.beacon = BeaconState(target=entry.path, label=entry.label, target_point=target)
        self.stats.beacons_placed += 1
        st.menu = MenuState()
        return [speech(g.time_ms, "in beacon mode")]

    def _beacon_guide(self, t: int, image_point: tuple[float, float]) -> list[AudioEvent]:
        st = self.state
        b = st.beacon
        assert b is not None
        out: list[AudioEvent] = []
        if hit_test(self.image, image_point, st.level) == b.target:
            st.beacon = None
            out.append(earcon(t, "beacon_arrived"))
            out.append(speech(t, f"arrived at {b.label}"))
            out.append(beep_rate(t, None))
            if len(b.target) == 1:
                st.last_announced_top = b.target
            out.extend(self._mark_touched(t, b.target))
            return out
        dx = b.target_point[0] - image_point[0]
        dy = b.target_point[1] - image_point[1]
        d = (dx * dx + dy * dy) ** 0.5
        interval = menu_mod.beep_interval_ms(d, self.config.menu_beacon)
        if interval != b.last_interval_ms:
            b.last_interval_ms = interval
            out.append(beep_rate(t, interval))
        period = self.config.menu_beacon.announce_period_ms
        if b.last_announce_ms is None or t - b.last_announce_ms >= period:
            b.last_announce_ms = t
            out.append(speech(t, menu_mod.direction_phrase(dx, dy)))
        return out

    # -- quadrant zoom -------------------------------------------------------------

    def _zoom_in(self, g: Tap) -> list[AudioEvent]:
        st = self.state
        if not self._zoom_enabled() or st.zoom is not None:
            return []
        q = zoom_mod.quadrant_of((g.x, g.y))
        st.zoom = ZoomState(quadrant=q)
        name = zoom_mod.quadrant_name(q, self.config.zoom)
        return [earcon(g.time_ms, "zoom_confirm"), speech(g.time_ms, f"zoomed into {name}")]

    def _zoom_out(self, t: int) -> list[AudioEvent]:
        st = self.state
        if st.zoom is None:
            return []
        out: list[AudioEvent] = []
        if st.zoom.in_bleed:
            out.append(tone(t, "bleed_warning", "stop"))
        st.zoom = None
        out.append(earcon(t, "zoom_confirm"))
        out.append(speech(t, "zoomed out"))
        return out

    def _bleed_check(self, t: int, image_point: tuple[float, float]) -> list[AudioEvent]:
        st = self.state
        assert st.zoom is not None
        path = hit_test(self.image, image_point, st.level)
        in_bleed = False
        if path is not None:
            in_bleed = zoom_mod.in_bleed_band(self.image.area_at(path), st.zoom.quadrant,
                                              image_point, self.config.zoom)
        out: list[AudioEvent] = []
        if in_bleed and not st.zoom.in_bleed:
            st.zoom.in_bleed = True
            out.append(tone(t, "bleed_warning", "start"))
            out.append(speech(t, BLEED_WARNING_TEXT))
        elif not in_bleed and st.zoom.in_bleed:
            st.zoom.in_bleed = False
            out.append(tone(t, "bleed_warning", "stop"))
        return out

    # -- continuous (position-driven) behaviors --------------------------------------

    def _on_finger_position(self, t: int, x: float, y: float) -> list[AudioEvent]:
        st = self.state
        if self._button_at(x, y) is not None:
            return []
        out: list[AudioEvent] = []
        px, py = self._to_image(x, y)

        if st.level is not None:
            parent = self.image.area_at(st.level)
            on_parent = point_in_polygon((px, py), parent.polygon)
            if not on_parent and not st.off_area_tone_on:
                st.off_area_tone_on = True
                out.append(tone(t, "off_area_warning", "start"))
            elif on_parent and st.off_area_tone_on:
                st.off_area_tone_on = False
                out.append(tone(t, "off_area_warning", "stop"))

        if st.zoom is not None:
            out.extend(self._bleed_check(t, (px, py)))

        if st.beacon is not None:
            out.extend(self._beacon_guide(t, (px, py)))
        return out

    def _on_finger_lift(self, t: int) -> list[AudioEvent]:
        st = self.state
        out: list[AudioEvent] = []
        if st.off_area_tone_on:
            st.off_area_tone_on = False
            out.append(tone(t, "off_area_warning", "stop"))
        if st.zoom is not None and st.zoom.in_bleed:
            st.zoom.in_bleed = False
            out.append(tone(t, "bleed_warning", "stop"))
        if st.beacon is not None and st.beacon.last_interval_ms is not None:
            st.beacon.last_interval_ms = None
            st.beacon.last_announce_ms = None
            out.append(beep_rate(t, None))
        return out
