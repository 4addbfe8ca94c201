"""Annotated-image data model: areas, CAM grids, validation, hit-testing.

An annotation describes one image as an ordered list of labeled polygonal
areas (with at most one level of nested sub-areas) plus an optional
class-activation grid used for prominence.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import geometry
from .geometry import Point

# An area path addresses an area: (i,) is the i-th top-level area and
# (i, j) is the j-th sub-area of that area.
AreaPath = tuple[int, ...]


class AnnotationError(ValueError):
    """Raised for unusable annotation files or bad area paths."""


@dataclass
class Area:
    label: str
    polygon: list[Point]
    sub_areas: list["Area"] = field(default_factory=list)
    recommended: bool = False
    prominence: float | None = None

    def has_subs(self) -> bool:
        return bool(self.sub_areas)


@dataclass
class CamGrid:
    rows: int
    cols: int
    values: list[float]

    def value_at(self, row: int, col: int) -> float:
        return self.values[row * self.cols + col]

    def cell_center(self, row: int, col: int) -> Point:
        return ((col + 0.5) / self.cols, (row + 0.5) / self.rows)

    def cell_of_point(self, point: Point) -> tuple[int, int]:
        col = min(self.cols - 1, max(0, int(point[0] * self.cols)))
        row = min(self.rows - 1, max(0, int(point[1] * self.rows)))
        return (row, col)


@dataclass
class AnnotatedImage:
    image_id: str
    width_px: int
    height_px: int
    caption: str
    areas: list[Area]
    cam: CamGrid | None = None

    def area_at(self, path: AreaPath) -> Area:
        try:
            area = self.areas[path[0]]
            for idx in path[1:]:
                area = area.sub_areas[idx]
        except (IndexError, TypeError) as exc:
            raise AnnotationError(f"no such area: {path}") from exc
        return area

    def all_paths(self) -> list[AreaPath]:
        paths: list[AreaPath] = []
        for i, area in enumerate(self.areas):
            paths.append((i,))
            for j in range(len(area.sub_areas)):
                paths.append((i, j))
        return paths

    def level_paths(self, parent: AreaPath | None) -> list[AreaPath]:
        """Paths at one exploration level: top-level areas, or the
        sub-areas of `parent`."""
        if parent is None:
            return [(i,) for i in range(len(self.areas))]
        base = self.area_at(parent)
        return [parent + (j,) for j in range(len(base.sub_areas))]


@dataclass
class ValidationIssue:
    severity: str  # "error" | "warning"
    path: str
    message: str

    def __str__(self) -> str:
        return f"{self.severity}: {self.path}: {self.message}"


# ---------------------------------------------------------------------------
# Validation

_KNOWN_IMAGE_KEYS = {"image_id", "width_px", "height_px", "caption", "areas", "cam"}
_KNOWN_AREA_KEYS = {"label", "polygon", "recommended", "sub_areas", "prominence"}
_KNOWN_CAM_KEYS = {"rows", "cols", "values"}


def validate(image: AnnotatedImage) -> list[ValidationIssue]:
    """Check every model invariant. Empty result means the image is valid;
    warnings do not make it invalid."""
    issues: list[ValidationIssue] = []

    def err(path: str, msg: str) -> None:
        issues.append(ValidationIssue("error", path, msg))

    def warn(path: str, msg: str) -> None:
        issues.append(ValidationIssue("warning", path, msg))

    if image.width_px <= 0 or image.height_px <= 0:
        err("image", "width_px and height_px must be positive")

    def check_area(area: Area, path: str, depth: int) -> None:
        if len(area.polygon) < 3:
            err(path, "polygon needs at least 3 vertices")
            return
        for x, y in area.polygon:
            if not (0.0 <= x <= 1.0 and 0.0 <= y <= 1.0):
                err(path, "vertex out of bounds")
                break
        if geometry.polygon_area(area.polygon) <= 0.0:
            err(path, "polygon has zero area")
        if not _is_simple(area.polygon):
            err(path, "polygon is self-intersecting")
        if area.prominence is not None and not (0.0 <= area.prominence <= 1.0):
            err(path, "prominence outside [0,1]")
        if depth == 0:
            for j, sub in enumerate(area.sub_areas):
                sub_path = f"{path}/sub_areas[{j}]"
                check_area(sub, sub_path, 1)
                if sub.recommended:
                    err(sub_path, "recommended is only allowed on top-level areas")
                if len(sub.polygon) >= 3:
                    c = geometry.polygon_centroid(sub.polygon)
                    if not geometry.point_in_polygon(c, area.polygon):
                        err(sub_path, "sub-area centroid lies outside parent polygon")
        elif area.sub_areas:
            err(path, "sub-areas may not have their own sub-areas")

    for i, area in enumerate(image.areas):
        check_area(area, f"areas[{i}]", 0)

    _check_label_uniqueness(image, issues)
    _check_top_level_overlap(image, warn)

    if image.cam is not None:
        cam = image.cam
        if cam.rows <= 0 or cam.cols <= 0:
            err("cam", "rows and cols must be positive")
        elif len(cam.values) != cam.rows * cam.cols:
            err("cam", "values length must equal rows*cols")
        else:
            for v in cam.values:
                if not (isinstance(v, (int, float)) and 0.0 <= v <= 1.0 and v == v):
                    err("cam", "values must be finite reals in [0,1]")
                    break

    return issues


def _check_label_uniqueness(image: AnnotatedImage, issues: list[ValidationIssue]) -> None:
    seen: dict[str, str] = {}
    for i, area in enumerate(image.areas):
        key = area.label.lower()
        if key in seen:
            issues.append(ValidationIssue("error", f"areas[{i}]", f"duplicate label {area.label!r} at top level"))
        seen[key] = area.label
        sub_seen: set[str] = set()
        for j, sub in enumerate(area.sub_areas):
            sk = sub.label.lower()
            if sk in sub_seen:
                issues.append(
                    ValidationIssue("error", f"areas[{i}]/sub_areas[{j}]", f"duplicate label {sub.label!r} within parent")
                )
            sub_seen.add(sk)


def _is_simple(polygon: list[Point]) -> bool:
    try:
        from shapely.geometry import Polygon as ShapelyPolygon

        return ShapelyPolygon(polygon).is_simple
    except Exception:
        return True


def _check_top_level_overlap(image: AnnotatedImage, warn) -> None:
    try:
        from shapely.geometry import Polygon as ShapelyPolygon
    except Exception:
        return
    polys = []
    for area in image.areas:
        if len(area.polygon) >= 3:
            try:
                polys.append(ShapelyPolygon(area.polygon).buffer(0))
            except Exception:
                polys.append(None)
        else:
            polys.append(None)
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if polys[i] is None or polys[j] is None:
                continue
            inter = polys[i].intersection(polys[j])
            if inter.area > 1e-9:
                warn(f"areas[{i}]", f"top-level overlap with areas[{j}]")


# ---------------------------------------------------------------------------
# Hit testing and prominence

def hit_test(image: AnnotatedImage, point: Point, parent: AreaPath | None = None) -> AreaPath | None:
    """Containing area path at one level, or None.

    At the top level candidates are the top-level areas; inside a parent
    they are that parent's sub-areas, and only points inside the parent
    polygon can hit them. When several candidate polygons contain the
    point the smallest absolute area wins, ties broken by list order.
    """
    if parent is not None:
        parent_area = image.area_at(parent)  # raises for bad paths
        if not geometry.point_in_polygon(point, parent_area.polygon):
            return None
        candidates = [(parent + (j,), sub) for j, sub in enumerate(parent_area.sub_areas)]
    else:
        candidates = [((i,), area) for i, area in enumerate(image.areas)]

    best: AreaPath | None = None
    best_area = float("inf")
    for path, area in candidates:
        if not geometry.bbox_contains(geometry.polygon_bbox(area.polygon), point):
            continue
        if geometry.point_in_polygon(point, area.polygon):
            a = geometry.polygon_area(area.polygon)
            if a < best_area:
                best = path
                best_area = a
    return best


def area_prominence(area: Area, cam: CamGrid) -> float:
    """Mean CAM value over cell centers inside the area polygon (row-major
    summation); if no center is inside, the value of the cell containing
    the polygon centroid."""
    total = 0.0
    count = 0
    for r in range(cam.rows):
        for c in range(cam.cols):
            if geometry.point_in_polygon(cam.cell_center(r, c), area.polygon):
                total += cam.value_at(r, c)
                count += 1
    if count == 0:
        r, c = cam.cell_of_point(geometry.polygon_centroid(area.polygon))
        return cam.value_at(r, c)
    return total / count


# ---------------------------------------------------------------------------
# Annotation file I/O (.annot.json)

def load_annotation(path: str) -> tuple[AnnotatedImage, list[ValidationIssue]]:
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    return parse_annotation(raw)


def parse_annotation(raw: dict) -> tuple[AnnotatedImage, list[ValidationIssue]]:
    """Build the model from parsed JSON. Unknown keys are reported as
    warnings alongside the structural validation result."""
    issues: list[ValidationIssue] = []
    if not isinstance(raw, dict):
        raise AnnotationError("annotation root must be a JSON object")
    for key in raw:
        if key not in _KNOWN_IMAGE_KEYS:
            issues.append(ValidationIssue("warning", "image", f"unknown key {key!r}"))

    def parse_area(obj: dict, where: str, depth: int) -> Area:
        if not isinstance(obj, dict):
            raise AnnotationError(f"{where}: area must be a JSON object")
        for key in obj:
            if key not in _KNOWN_AREA_KEYS:
                issues.append(ValidationIssue("warning", where, f"unknown key {key!r}"))
        polygon = [(float(p[0]), float(p[1])) for p in obj.get("polygon", [])]
        subs = []
        if depth == 0:
            subs = [
                parse_area(s, f"{where}/sub_areas[{j}]", 1)
                for j, s in enumerate(obj.get("sub_areas", []))
            ]
        elif obj.get("sub_areas"):
            subs = [parse_area(s, f"{where}/sub_areas[{j}]", 2) for j, s in enumerate(obj["sub_areas"])]
        return Area(
            label=str(obj.get("label", "")),
            polygon=polygon,
            sub_areas=subs,
            recommended=bool(obj.get("recommended", False)),
            prominence=(float(obj["prominence"]) if obj.get("prominence") is not None else None),
        )

    cam = None
    if raw.get("cam") is not None:
        cam_raw = raw["cam"]
        for key in cam_raw:
            if key not in _KNOWN_CAM_KEYS:
                issues.append(ValidationIssue("warning", "cam", f"unknown key {key!r}"))
        cam = CamGrid(
            rows=int(cam_raw.get("rows", 0)),
            cols=int(cam_raw.get("cols", 0)),
            values=[float(v) for v in cam_raw.get("values", [])],
        )

    image = AnnotatedImage(
        image_id=str(raw.get("image_id", "")),
        width_px=int(raw.get("width_px", 0)),
        height_px=int(raw.get("height_px", 0)),
        caption=str(raw.get("caption", "")),
        areas=[parse_area(a, f"areas[{i}]", 0) for i, a in enumerate(raw.get("areas", []))],
        cam=cam,
    )
    issues.extend(validate(image))
    return image, issues


def _round9(x: float) -> float:
    return round(x, 9)


def annotation_to_dict(image: AnnotatedImage) -> dict:
    def area_dict(area: Area) -> dict:
        out: dict = {
            "label": area.label,
            "polygon": [[_round9(x), _round9(y)] for x, y in area.polygon],
        }
        if area.recommended:
            out["recommended"] = True
        if area.prominence is not None:
            out["prominence"] = _round9(area.prominence)
        if area.sub_areas:
            out["sub_areas"] = [area_dict(s) for s in area.sub_areas]
        return out

    out: dict = {
        "image_id": image.image_id,
        "width_px": image.width_px,
        "height_px": image.height_px,
        "caption": image.caption,
        "areas": [area_dict(a) for a in image.areas],
    }
    if image.cam is not None:
        out["cam"] = {
            "rows": image.cam.rows,
            "cols": image.cam.cols,
            "values": [_round9(v) for v in image.cam.values],
        }
    return out


def save_annotation(image: AnnotatedImage, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(annotation_to_dict(image), fh, indent=2)
        fh.write("\n")
