"""Engine configuration: timing thresholds, menu/beacon/zoom constants.

All constants live here so tests can tighten them and traces stay
reproducible. Values load from a TOML file with sections `timing`,
`menu_beacon`, `hints`, and `zoom`; unknown keys are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace

import tomli

Rect = tuple[float, float, float, float]  # x0, y0, x1, y1


@dataclass(frozen=True)
class TimingConfig:
    tap_max_ms: int = 250
    multi_tap_gap_ms: int = 300
    hold_ms: int = 500
    slop: float = 0.02


@dataclass(frozen=True)
class MenuBeaconConfig:
    min_interval_ms: int = 120
    max_interval_ms: int = 900
    announce_period_ms: int = 1500
    interval_step_ms: int = 10
    # Menu buttons: fixed rectangles in normalized screen coordinates.
    open_button: Rect = (0.0, 0.0, 0.18, 0.10)
    scroll_button: Rect = (0.0, 0.90, 0.18, 1.0)


@dataclass(frozen=True)
class HintsConfig:
    volume_floor: float = 0.3
    volume_ceiling: float = 1.0


@dataclass(frozen=True)
class ZoomConfig:
    guard_band: float = 0.03
    quadrant_names: tuple[str, str, str, str] = ("top left", "top right", "bottom left", "bottom right")


@dataclass(frozen=True)
class EngineConfig:
    timing: TimingConfig = field(default_factory=TimingConfig)
    menu_beacon: MenuBeaconConfig = field(default_factory=MenuBeaconConfig)
    hints: HintsConfig = field(default_factory=HintsConfig)
    zoom: ZoomConfig = field(default_factory=ZoomConfig)


_SECTIONS = {
    "timing": TimingConfig,
    "menu_beacon": MenuBeaconConfig,
    "hints": HintsConfig,
    "zoom": ZoomConfig,
}


def load_config(path: str) -> EngineConfig:
    with open(path, "rb") as fh:
        raw = tomli.load(fh)
    return config_from_dict(raw)


def config_from_dict(raw: dict) -> EngineConfig:
    cfg = EngineConfig()
    for section, values in raw.items():
        if section not in _SECTIONS:
            raise ValueError(f"unknown config section {section!r}")
        cls = _SECTIONS[section]
        known = {f.name: f for f in fields(cls)}
        updates = {}
        for key, value in values.items():
            if key not in known:
                raise ValueError(f"unknown config key {section}.{key}")
            if isinstance(value, list):
                value = tuple(value)
            updates[key] = value
        cfg = replace(cfg, **{section: replace(getattr(cfg, section), **updates)})
    return cfg


def rect_contains(rect: Rect, x: float, y: float) -> bool:
    x0, y0, x1, y1 = rect
    return x0 <= x <= x1 and y0 <= y <= y1
