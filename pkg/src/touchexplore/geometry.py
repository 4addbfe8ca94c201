"""Planar geometry primitives on normalized [0,1]x[0,1] coordinates.

Coordinate frame: x grows right, y grows down, origin at the top-left
corner of the image (touchscreen convention).
"""

from __future__ import annotations

import math

Point = tuple[float, float]

# Boundary points count as inside within this distance (normalized units).
EDGE_TOLERANCE = 1e-9


def polygon_signed_area(polygon: list[Point]) -> float:
    """Shoelace signed area. Positive when vertices wind clockwise in
    screen coordinates (y down)."""
    total = 0.0
    n = len(polygon)
    for i in range(n):
        x1, y1 = polygon[i]
        x2, y2 = polygon[(i + 1) % n]
        total += x1 * y2 - x2 * y1
    return total / 2.0


def polygon_area(polygon: list[Point]) -> float:
    return abs(polygon_signed_area(polygon))


def polygon_centroid(polygon: list[Point]) -> Point:
    """Area-weighted centroid; falls back to the vertex mean when the
    signed area is too small to divide by."""
    a = polygon_signed_area(polygon)
    if abs(a) < 1e-12:
        n = len(polygon)
        return (sum(p[0] for p in polygon) / n, sum(p[1] for p in polygon) / n)
    cx = 0.0
    cy = 0.0
    n = len(polygon)
    for i in range(n):
        x1, y1 = polygon[i]
        x2, y2 = polygon[(i + 1) % n]
        cross = x1 * y2 - x2 * y1
        cx += (x1 + x2) * cross
        cy += (y1 + y2) * cross
    return (cx / (6.0 * a), cy / (6.0 * a))


def _point_segment_distance(p: Point, a: Point, b: Point) -> float:
    px, py = p
    ax, ay = a
    bx, by = b
    dx = bx - ax
    dy = by - ay
    seg_len_sq = dx * dx + dy * dy
    if seg_len_sq == 0.0:
        return math.hypot(px - ax, py - ay)
    t = ((px - ax) * dx + (py - ay) * dy) / seg_len_sq
    t = max(0.0, min(1.0, t))
    return math.hypot(px - (ax + t * dx), py - (ay + t * dy))


def on_polygon_boundary(point: Point, polygon: list[Point], tol: float = EDGE_TOLERANCE) -> bool:
    n = len(polygon)
    for i in range(n):
        if _point_segment_distance(point, polygon[i], polygon[(i + 1) % n]) <= tol:
            return True
    return False


def point_in_polygon(point: Point, polygon: list[Point], tol: float = EDGE_TOLERANCE) -> bool:
    """Even-odd containment; boundary points are inside (within tol)."""
    if on_polygon_boundary(point, polygon, tol):
        return True
    x, y = point
    inside = False
    n = len(polygon)
    x1, y1 = polygon[0]
    for i in range(1, n + 1):
        x2, y2 = polygon[i % n]
        # Count crossings of the horizontal ray going right from (x, y).
        if (y1 > y) != (y2 > y):
            x_at_y = x1 + (y - y1) * (x2 - x1) / (y2 - y1)
            if x < x_at_y:
                inside = not inside
        x1, y1 = x2, y2
    return inside


def polygon_bbox(polygon: list[Point]) -> tuple[float, float, float, float]:
    xs = [p[0] for p in polygon]
    ys = [p[1] for p in polygon]
    return (min(xs), min(ys), max(xs), max(ys))


def bbox_contains(bbox: tuple[float, float, float, float], point: Point, tol: float = EDGE_TOLERANCE) -> bool:
    x0, y0, x1, y1 = bbox
    x, y = point
    return x0 - tol <= x <= x1 + tol and y0 - tol <= y <= y1 + tol
