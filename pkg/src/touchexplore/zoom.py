"""Quadrant zoom: fixed 2x zoom into one of four image quadrants.

Quadrants follow reading order: Q1 top-left, Q2 top-right, Q3
bottom-left, Q4 bottom-right. While zoomed, the whole screen maps
affinely onto the active quadrant; hit-testing happens in image space.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import ZoomConfig
from .geometry import Point, polygon_bbox
from .model import AnnotatedImage, Area

QUADRANT_ORIGINS = ((0.0, 0.0), (0.5, 0.0), (0.0, 0.5), (0.5, 0.5))


@dataclass
class ZoomState:
    quadrant: int  # 0..3 for Q1..Q4
    in_bleed: bool = False


def quadrant_of(point: Point) -> int:
    """Quadrant index for a point; points exactly on the x=0.5 or y=0.5
    line resolve to the lower-index quadrant."""
    x, y = point
    col = 0 if x <= 0.5 else 1
    row = 0 if y <= 0.5 else 1
    return row * 2 + col


def quadrant_rect(quadrant: int) -> tuple[float, float, float, float]:
    qx0, qy0 = QUADRANT_ORIGINS[quadrant]
    return (qx0, qy0, qx0 + 0.5, qy0 + 0.5)


def to_image_coords(quadrant: int, screen_point: Point) -> Point:
    qx0, qy0 = QUADRANT_ORIGINS[quadrant]
    return (qx0 + screen_point[0] / 2.0, qy0 + screen_point[1] / 2.0)


def to_screen_coords(quadrant: int, image_point: Point) -> Point:
    qx0, qy0 = QUADRANT_ORIGINS[quadrant]
    return ((image_point[0] - qx0) * 2.0, (image_point[1] - qy0) * 2.0)


def polygon_in_quadrant(area: Area, quadrant: int) -> bool:
    """Whether the polygon lies fully inside the quadrant (the quadrant is
    convex, so vertex containment suffices)."""
    x0, y0, x1, y1 = quadrant_rect(quadrant)
    return all(x0 <= x <= x1 and y0 <= y <= y1 for x, y in area.polygon)


def polygon_intersects_quadrant(area: Area, quadrant: int) -> bool:
    bx0, by0, bx1, by1 = polygon_bbox(area.polygon)
    x0, y0, x1, y1 = quadrant_rect(quadrant)
    return not (bx1 < x0 or bx0 > x1 or by1 < y0 or by0 > y1)


def exit_sides(area: Area, quadrant: int) -> list[str]:
    """Sides of the quadrant the polygon extends beyond."""
    bx0, by0, bx1, by1 = polygon_bbox(area.polygon)
    x0, y0, x1, y1 = quadrant_rect(quadrant)
    sides = []
    if bx0 < x0:
        sides.append("left")
    if bx1 > x1:
        sides.append("right")
    if by0 < y0:
        sides.append("top")
    if by1 > y1:
        sides.append("bottom")
    return sides


def in_bleed_band(area: Area, quadrant: int, image_point: Point, cfg: ZoomConfig) -> bool:
    """Whether a touch on `area` lies in the bleed region: the area exits
    the quadrant and the point sits within the guard band of the boundary
    on a side where it exits."""
    if polygon_in_quadrant(area, quadrant):
        return False
    x0, y0, x1, y1 = quadrant_rect(quadrant)
    px, py = image_point
    band = cfg.guard_band
    for side in exit_sides(area, quadrant):
        if side == "left" and px <= x0 + band:
            return True
        if side == "right" and px >= x1 - band:
            return True
        if side == "top" and py <= y0 + band:
            return True
        if side == "bottom" and py >= y1 - band:
            return True
    return False


def quadrant_name(quadrant: int, cfg: ZoomConfig) -> str:
    return cfg.quadrant_names[quadrant]
