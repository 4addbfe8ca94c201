"""Independent reference implementations used only as test oracles.

These deliberately re-derive results through different formulations than
the package code (vertical-ray parity instead of horizontal, rejection
sampling, explicit comparator sorts) so agreement is meaningful.
"""

from __future__ import annotations

import functools
import math
import random


def _dist_point_segment(px, py, ax, ay, bx, by):
    vx, vy = bx - ax, by - ay
    ls = vx * vx + vy * vy
    if ls == 0:
        return math.hypot(px - ax, py - ay)
    t = max(0.0, min(1.0, ((px - ax) * vx + (py - ay) * vy) / ls))
    return math.hypot(px - (ax + t * vx), py - (ay + t * vy))


def oracle_point_in_polygon(point, polygon, tol=1e-9):
    """Even-odd rule via a vertical downward ray; boundary inclusive."""
    x, y = point
    n = len(polygon)
    for i in range(n):
        ax, ay = polygon[i]
        bx, by = polygon[(i + 1) % n]
        if _dist_point_segment(x, y, ax, ay, bx, by) <= tol:
            return True
    crossings = 0
    for i in range(n):
        ax, ay = polygon[i]
        bx, by = polygon[(i + 1) % n]
        if (ax > x) != (bx > x):
            y_at_x = ay + (x - ax) * (by - ay) / (bx - ax)
            if y_at_x > y:
                crossings += 1
    return crossings % 2 == 1


def oracle_centroid_monte_carlo(polygon, samples=1_000_000, seed=7):
    """Rejection-sampling centroid over the polygon's bounding box."""
    rng = random.Random(seed)
    xs = [p[0] for p in polygon]
    ys = [p[1] for p in polygon]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    sx = sy = 0.0
    hits = 0
    for _ in range(samples):
        x = rng.uniform(x0, x1)
        y = rng.uniform(y0, y1)
        if oracle_point_in_polygon((x, y), polygon, tol=0.0):
            sx += x
            sy += y
            hits += 1
    assert hits > 0
    return (sx / hits, sy / hits)


def oracle_area_prominence(polygon, rows, cols, values):
    """Row-major mean over CAM cell centers inside the polygon."""
    total = 0.0
    count = 0
    for r in range(rows):
        for c in range(cols):
            center = ((c + 0.5) / cols, (r + 0.5) / rows)
            if oracle_point_in_polygon(center, polygon):
                total += values[r * cols + c]
                count += 1
    if count == 0:
        return None
    return total / count


def oracle_direction_sector(vx, vy):
    """8-way sector from angle arithmetic: nearest multiple of 45 degrees,
    boundary ties to the smaller sector index."""
    angle = math.degrees(math.atan2(vy, vx)) % 360.0
    best = None
    best_delta = None
    for k in range(8):
        delta = abs((angle - 45.0 * k + 180.0) % 360.0 - 180.0)
        if best is None or delta < best_delta - 1e-12:
            best, best_delta = k, delta
        elif abs(delta - best_delta) <= 1e-12 and k < best:
            best = k
    return best


def oracle_menu_order(entries, hints_enabled):
    """Independent comparator for menu ordering. `entries` are tuples
    (annotation_order, label, explored, recommended, sub_count)."""

    def block_sorted(block):
        if not hints_enabled:
            return sorted(block, key=lambda e: e[0])
        rec = [e for e in block if e[3]]
        other = [e for e in block if not e[3]]

        def cmp_rec(a, b):
            return -1 if a[1].lower() < b[1].lower() else (1 if a[1].lower() > b[1].lower() else 0)

        def cmp_other(a, b):
            if a[4] != b[4]:
                return -1 if a[4] > b[4] else 1
            return cmp_rec(a, b)

        return sorted(rec, key=functools.cmp_to_key(cmp_rec)) + sorted(other, key=functools.cmp_to_key(cmp_other))

    unexplored = [e for e in entries if not e[2]]
    explored = [e for e in entries if e[2]]
    return block_sorted(unexplored) + block_sorted(explored)


def oracle_unexplored_count(image, touched, parent=None):
    """From-scratch recount of unexplored areas at one level."""
    if parent is None:
        count = 0
        for i, area in enumerate(image.areas):
            if not area.sub_areas:
                if (i,) not in touched:
                    count += 1
            else:
                subs = [(i, j) for j in range(len(area.sub_areas))]
                if not all(p in touched for p in subs):
                    count += 1
        return count
    base = image.area_at(parent)
    return sum(1 for j in range(len(base.sub_areas)) if parent + (j,) not in touched)
