"""Prominence baking and speech-volume mapping for the hints tool.

Prominence is the mean CAM activation over an area; per-image min-max
normalization maps it onto a volume range so every image uses the full
range regardless of CAM scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import HintsConfig
from .model import AnnotatedImage, AreaPath, area_prominence


class ProminenceError(ValueError):
    pass


@dataclass(frozen=True)
class ProminenceTable:
    values: dict[AreaPath, float]
    min_value: float
    max_value: float

    def __getitem__(self, path: AreaPath) -> float:
        return self.values[path]


def bake_prominence(image: AnnotatedImage) -> ProminenceTable:
    """Prominence for every area and sub-area of the image."""
    if image.cam is None:
        raise ProminenceError("no CAM grid")
    values: dict[AreaPath, float] = {}
    for path in image.all_paths():
        values[path] = area_prominence(image.area_at(path), image.cam)
    lo = min(values.values())
    hi = max(values.values())
    return ProminenceTable(values=values, min_value=lo, max_value=hi)


def speech_volume(table: ProminenceTable, path: AreaPath, cfg: HintsConfig = HintsConfig()) -> float:
    if path not in table.values:
        raise ProminenceError(f"unknown area path {path}")
    if table.max_value == table.min_value:
        return 1.0
    frac = (table.values[path] - table.min_value) / (table.max_value - table.min_value)
    return cfg.volume_floor + (cfg.volume_ceiling - cfg.volume_floor) * frac


def first_touch_decorate(touched_once: set[AreaPath], path: AreaPath, speech_event) -> list:
    """Prepend the first-touch earcon when the area has never been touched.

    Callers must pass the touched set as it was *before* recording this
    touch."""
    from .events import earcon

    if path not in touched_once:
        return [earcon(speech_event.time_ms, "first_touch"), speech_event]
    return [speech_event]


def write_prominence(image: AnnotatedImage, table: ProminenceTable) -> None:
    """Store baked values on the areas themselves (for annotation export
    and debug overlays)."""
    for path, value in table.values.items():
        image.area_at(path).prominence = value
