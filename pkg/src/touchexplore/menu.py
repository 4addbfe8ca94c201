"""Audio menu and guidance beacon.

The menu lists the areas of the active level; explored entries are
demoted to the end and re-voiced. The beacon steers the finger toward a
chosen area's centroid with periodic 8-way direction announcements and
distance-coded beep intervals.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .config import MenuBeaconConfig
from .geometry import Point
from .model import AnnotatedImage, AreaPath

MAX_DISTANCE = math.sqrt(2.0)  # farthest two points can be in the unit square

# Fixed sector order; ties on a boundary resolve to the smaller index.
DIRECTION_NAMES = (
    "right",
    "down and right",
    "down",
    "down and left",
    "left",
    "up and left",
    "up",
    "up and right",
)


@dataclass
class MenuEntry:
    path: AreaPath
    label: str
    explored: bool
    recommended: bool
    sub_count: int


@dataclass
class MenuState:
    open: bool = False
    entries: list[MenuEntry] = field(default_factory=list)
    cursor: int = -1  # -1: opened but nothing selected yet


@dataclass
class BeaconState:
    target: AreaPath
    label: str
    target_point: Point
    last_announce_ms: int | None = None
    last_interval_ms: int | None = None


def build_menu(image: AnnotatedImage, level_paths: list[AreaPath],
               explored: set[AreaPath], hints_enabled: bool) -> list[MenuEntry]:
    """Menu entries for one level: unexplored block then explored block.

    Within each block, with hints on: recommended entries first sorted
    alphabetically, then the rest by descending sub-area count with
    alphabetical ties; with hints off: annotation order.
    """
    entries = []
    for order, path in enumerate(level_paths):
        area = image.area_at(path)
        entries.append((order, MenuEntry(
            path=path,
            label=area.label,
            explored=path in explored,
            recommended=area.recommended,
            sub_count=len(area.sub_areas),
        )))

    def sort_block(block: list[tuple[int, MenuEntry]]) -> list[MenuEntry]:
        if not hints_enabled:
            return [e for _, e in sorted(block, key=lambda oe: oe[0])]
        recommended = sorted((e for _, e in block if e.recommended), key=lambda e: e.label.lower())
        rest = sorted((e for _, e in block if not e.recommended),
                      key=lambda e: (-e.sub_count, e.label.lower()))
        return recommended + rest

    unexplored = [(o, e) for o, e in entries if not e.explored]
    explored_block = [(o, e) for o, e in entries if e.explored]
    return sort_block(unexplored) + sort_block(explored_block)


def entry_utterance(entry: MenuEntry, hints_enabled: bool) -> str:
    parts = []
    # the "recommended" surfacing belongs to the hints tool; the plain menu
    # never mentions it
    if hints_enabled and entry.recommended:
        parts.append("recommended")
    if entry.explored:
        parts.append("explored")
    parts.append(entry.label)
    text = " ".join(parts)
    if hints_enabled and entry.sub_count > 0:
        noun = "sub-area" if entry.sub_count == 1 else "sub-areas"
        text += f", {entry.sub_count} {noun}"
    return text


def unexplored_phrase(n: int) -> str:
    if n == 0:
        return "no more unexplored areas"
    if n == 1:
        return "1 unexplored area"
    return f"{n} unexplored areas"


def beep_interval_ms(distance: float, cfg: MenuBeaconConfig) -> int:
    """Distance-to-beep-interval map: short intervals near the target,
    long far away, quantized to interval_step_ms."""
    frac = min(distance / MAX_DISTANCE, 1.0)
    raw = cfg.min_interval_ms + (cfg.max_interval_ms - cfg.min_interval_ms) * frac
    step = cfg.interval_step_ms
    return int(round(raw / step)) * step


def direction_sector(vx: float, vy: float) -> int:
    """8-way quantization of the vector (vx, vy), y pointing down.

    Sector k is centered at k*45 degrees measured from +x toward +y
    (screen-down). Boundary angles resolve to the smaller sector index.
    """
    angle = math.degrees(math.atan2(vy, vx))  # (-180, 180]
    if angle < 0:
        angle += 360.0  # [0, 360)
    half = 22.5
    for k in range(8):
        center = k * 45.0
        delta = abs(angle - center)
        delta = min(delta, 360.0 - delta)
        if delta < half or math.isclose(delta, half, abs_tol=1e-12):
            return k
    return 0


def direction_phrase(vx: float, vy: float) -> str:
    return DIRECTION_NAMES[direction_sector(vx, vy)]
