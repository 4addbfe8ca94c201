from __future__ import annotations

import math
import random

import pytest

from touchexplore.model import AnnotatedImage, Area, CamGrid


def make_area(label, polygon, subs=(), recommended=False):
    return Area(label=label, polygon=tuple(polygon), sub_areas=tuple(subs), recommended=recommended)


def rect(x0, y0, x1, y1):
    return ((x0, y0), (x1, y0), (x1, y1), (x0, y1))


def make_image(areas, cam=None, image_id="test", caption="a test image"):
    return AnnotatedImage(
        image_id=image_id,
        width_px=1000,
        height_px=1000,
        caption=caption,
        areas=tuple(areas),
        cam=cam,
    )


def random_polygon(rng: random.Random, n=None, cx=None, cy=None, radius=None,
                   jitter=(0.5, 1.0)):
    """Simple star-shaped polygon: angle-sorted points on a radially
    jittered circle. With jitter=(1, 1) the points are concyclic, so the
    polygon is convex."""
    n = n or rng.randint(3, 9)
    cx = cx if cx is not None else rng.uniform(0.25, 0.75)
    cy = cy if cy is not None else rng.uniform(0.25, 0.75)
    radius = radius or rng.uniform(0.05, min(cx, cy, 1 - cx, 1 - cy) - 0.01)
    angles = sorted(rng.uniform(0, 2 * math.pi) for _ in range(n))
    # ensure distinct angles so the polygon is simple and non-degenerate
    if len(set(round(a, 6) for a in angles)) < n:
        return random_polygon(rng, n, cx, cy, radius, jitter)
    radii = [radius * rng.uniform(*jitter) for _ in angles]
    return tuple(
        (cx + r * math.cos(a), cy + r * math.sin(a)) for a, r in zip(angles, radii)
    )


@pytest.fixture
def two_level_image():
    """One parent with two subs, two leaves; used across engine tests."""
    house = make_area(
        "house",
        rect(0.30, 0.30, 0.70, 0.80),
        subs=(
            make_area("door", rect(0.45, 0.60, 0.55, 0.78)),
            make_area("window", rect(0.33, 0.38, 0.43, 0.50)),
        ),
        recommended=True,
    )
    sky = make_area("sky", rect(0.20, 0.02, 0.98, 0.18))
    tree = make_area("tree", rect(0.78, 0.40, 0.95, 0.90))
    cam = CamGrid(rows=4, cols=4, values=tuple(i / 15 for i in range(16)))
    return make_image([house, sky, tree], cam=cam)
