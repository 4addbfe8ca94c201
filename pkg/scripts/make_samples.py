#!/usr/bin/env python3
"""Regenerate the bundled sample annotations in samples/.

Four images, one per content family the tools are aimed at: a painting,
a stock photo, a historical photo, and a floor plan. The floor plan
deliberately contains a small free-standing area (the closet, under 0.1
across) so coarse scanning strategies can miss it while guided ones
cannot. Deterministic: CAM grids come from fixed gaussian blobs.
"""

from __future__ import annotations

import math
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from touchexplore.model import AnnotatedImage, Area, CamGrid, save_annotation, validate

SAMPLES = Path(__file__).resolve().parents[1] / "samples"


def rect(x0, y0, x1, y1):
    return [(x0, y0), (x1, y0), (x1, y1), (x0, y1)]


def cam(rows, cols, blobs):
    """CAM from a sum of gaussian blobs (cx, cy, sigma, weight), normalized
    to [0,1] and rounded so the files stay byte-stable."""
    values = []
    for r in range(rows):
        for c in range(cols):
            x, y = (c + 0.5) / cols, (r + 0.5) / rows
            v = 0.0
            for bx, by, sigma, w in blobs:
                v += w * math.exp(-((x - bx) ** 2 + (y - by) ** 2) / (2 * sigma**2))
            values.append(v)
    top = max(values) or 1.0
    return CamGrid(rows=rows, cols=cols, values=[round(v / top, 6) for v in values])


def painting():
    areas = [
        Area("curtain", [(0.20, 0.05), (0.33, 0.07), (0.31, 0.90), (0.21, 0.88)]),
        Area("chandelier", [(0.50, 0.04), (0.62, 0.07), (0.60, 0.16), (0.47, 0.13)]),
        Area(
            "artist",
            rect(0.55, 0.35, 0.76, 0.85),
            sub_areas=[
                Area("easel", rect(0.68, 0.45, 0.75, 0.80)),
                Area("palette", rect(0.57, 0.55, 0.64, 0.62)),
            ],
            recommended=True,
        ),
        Area(
            "woman by the window",
            rect(0.36, 0.30, 0.52, 0.78),
            sub_areas=[
                Area("headdress", rect(0.40, 0.32, 0.48, 0.40)),
                Area("trumpet", rect(0.38, 0.55, 0.44, 0.70)),
            ],
        ),
        Area("map on the wall", rect(0.80, 0.10, 0.96, 0.30)),
        Area("wooden floor", rect(0.36, 0.88, 0.96, 0.97)),
    ]
    return AnnotatedImage(
        image_id="painting",
        width_px=1600,
        height_px=1200,
        caption="An oil painting of an artist at work in a sunlit studio",
        areas=areas,
        cam=cam(8, 8, [(0.65, 0.6, 0.18, 1.0), (0.44, 0.5, 0.14, 0.6)]),
    )


def greenway():
    areas = [
        Area("trees", [(0.20, 0.04), (0.58, 0.06), (0.55, 0.28), (0.22, 0.26)]),
        Area("river", rect(0.62, 0.05, 0.97, 0.50)),
        Area(
            "picnic group",
            rect(0.30, 0.52, 0.60, 0.84),
            sub_areas=[
                Area("blanket", rect(0.32, 0.70, 0.58, 0.82)),
                Area("basket", rect(0.44, 0.56, 0.52, 0.64)),
            ],
            recommended=True,
        ),
        Area("cyclist", rect(0.70, 0.60, 0.80, 0.74)),
        Area("gravel path", rect(0.22, 0.88, 0.96, 0.97)),
    ]
    return AnnotatedImage(
        image_id="greenway",
        width_px=2000,
        height_px=1333,
        caption="A stock photo of people picnicking beside a river greenway",
        areas=areas,
        cam=cam(6, 6, [(0.45, 0.68, 0.16, 1.0), (0.75, 0.67, 0.08, 0.5)]),
    )


def newsprint():
    areas = [
        Area(
            "man in a hat",
            rect(0.36, 0.22, 0.58, 0.88),
            sub_areas=[
                Area("hat", rect(0.40, 0.24, 0.54, 0.34)),
                Area("overcoat", rect(0.38, 0.48, 0.56, 0.84)),
            ],
            recommended=True,
        ),
        Area(
            "newspaper stand",
            rect(0.64, 0.40, 0.92, 0.90),
            sub_areas=[Area("headline board", rect(0.66, 0.44, 0.90, 0.54))],
        ),
        Area("city backdrop", rect(0.20, 0.04, 0.92, 0.18)),
    ]
    return AnnotatedImage(
        image_id="newsprint",
        width_px=1024,
        height_px=768,
        caption="A black-and-white street photo of a man buying a newspaper",
        areas=areas,
        cam=cam(5, 5, [(0.47, 0.5, 0.2, 1.0)]),
    )


def floorplan():
    areas = [
        Area(
            "living room",
            rect(0.20, 0.08, 0.55, 0.45),
            sub_areas=[
                Area("sofa", rect(0.22, 0.12, 0.40, 0.20)),
                Area("coffee table", rect(0.28, 0.26, 0.40, 0.34)),
            ],
            recommended=True,
        ),
        Area(
            "kitchen",
            rect(0.60, 0.08, 0.95, 0.40),
            sub_areas=[Area("stove", rect(0.64, 0.10, 0.72, 0.18))],
        ),
        Area("bedroom", rect(0.20, 0.55, 0.55, 0.95)),
        Area("bathroom", rect(0.60, 0.70, 0.80, 0.95)),
        # small enough (0.09 x 0.10) to slip between 0.3-pitch scan lines
        Area("closet", rect(0.84, 0.52, 0.93, 0.62)),
    ]
    return AnnotatedImage(
        image_id="floorplan",
        width_px=1200,
        height_px=1200,
        caption="A floor plan of a one-bedroom apartment",
        areas=areas,
        cam=cam(4, 4, [(0.37, 0.26, 0.2, 1.0)]),
    )


def main() -> int:
    SAMPLES.mkdir(exist_ok=True)
    ok = True
    for image in (painting(), greenway(), newsprint(), floorplan()):
        issues = validate(image)
        errors = [i for i in issues if i.severity == "error"]
        for issue in issues:
            print(f"{image.image_id}: {issue.severity} at {issue.path}: {issue.message}")
        if errors:
            ok = False
            continue
        path = SAMPLES / f"{image.image_id}.annot.json"
        save_annotation(image, path)
        print(f"wrote {path}")
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
