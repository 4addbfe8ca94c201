from __future__ import annotations

import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from touchexplore.geometry import polygon_area, polygon_centroid
from touchexplore.model import (
    AnnotationError,
    CamGrid,
    area_prominence,
    hit_test,
    load_annotation,
    parse_annotation,
    save_annotation,
    validate,
)

from .conftest import make_area, make_image, random_polygon, rect
from .oracles import oracle_area_prominence, oracle_point_in_polygon


class TestValidate:
    def test_minimal_valid_image(self):
        img = make_image([make_area("whole", rect(0, 0, 1, 1))])
        assert validate(img) == []

    def test_vertex_out_of_bounds(self):
        img = make_image([make_area("a", ((1.2, 0.5), (0.5, 0.5), (0.5, 0.9)))])
        issues = [i for i in validate(img) if i.severity == "error"]
        assert len(issues) == 1
        assert "out of bounds" in issues[0].message

    def test_identical_top_level_polygons_warn(self):
        poly = rect(0.2, 0.2, 0.8, 0.8)
        img = make_image([make_area("a", poly), make_area("b", poly)])
        issues = validate(img)
        assert any(i.severity == "warning" and "overlap" in i.message for i in issues)
        assert not any(i.severity == "error" for i in issues)
        # independent grid oracle: sampled points inside both polygons exist
        pts = [(x / 20, y / 20) for x in range(21) for y in range(21)]
        assert any(
            oracle_point_in_polygon(p, poly) and oracle_point_in_polygon(p, poly) for p in pts
        )

    def test_degenerate_polygon_rejected(self):
        img = make_image([make_area("a", ((0.1, 0.1), (0.5, 0.5), (0.9, 0.9)))])
        assert any(i.severity == "error" for i in validate(img))

    def test_self_intersecting_rejected(self):
        bowtie = ((0.1, 0.1), (0.9, 0.9), (0.9, 0.1), (0.1, 0.9))
        img = make_image([make_area("a", bowtie)])
        assert any(
            i.severity == "error" and "self-intersecting" in i.message for i in validate(img)
        )

    def test_recommended_sub_area_rejected(self):
        sub = make_area("s", rect(0.4, 0.4, 0.6, 0.6), recommended=True)
        img = make_image([make_area("a", rect(0.2, 0.2, 0.8, 0.8), subs=(sub,))])
        assert any("recommended" in i.message for i in validate(img) if i.severity == "error")

    def test_sub_centroid_must_be_in_parent(self):
        sub = make_area("s", rect(0.85, 0.85, 0.95, 0.95))
        img = make_image([make_area("a", rect(0.2, 0.2, 0.8, 0.8), subs=(sub,))])
        assert any("centroid" in i.message for i in validate(img) if i.severity == "error")

    def test_sub_extending_past_parent_ok_if_centroid_inside(self):
        sub = make_area("s", rect(0.6, 0.6, 0.9, 0.9))  # centroid (0.75,0.75) inside
        img = make_image([make_area("a", rect(0.2, 0.2, 0.8, 0.8), subs=(sub,))])
        assert not any(i.severity == "error" for i in validate(img))

    def test_cam_shape_mismatch(self):
        img = make_image(
            [make_area("a", rect(0, 0, 1, 1))],
            cam=CamGrid(rows=2, cols=2, values=(0.1, 0.2, 0.3)),
        )
        assert any(i.severity == "error" for i in validate(img))


class TestHitTest:
    def test_center_of_square(self):
        img = make_image([make_area("a", rect(0, 0, 1, 1))])
        assert hit_test(img, (0.5, 0.5)) == (0,)

    def test_smallest_wins(self):
        img = make_image(
            [
                make_area("big", rect(0.1, 0.1, 0.9, 0.9)),
                make_area("small", rect(0.4, 0.4, 0.6, 0.6)),
            ]
        )
        assert hit_test(img, (0.5, 0.5)) == (1,)
        assert hit_test(img, (0.2, 0.2)) == (0,)

    def test_tie_broken_by_list_order(self):
        poly = rect(0.3, 0.3, 0.7, 0.7)
        img = make_image([make_area("first", poly), make_area("second", poly)])
        assert hit_test(img, (0.5, 0.5)) == (0,)

    def test_inside_parent_clips_to_parent(self):
        sub = make_area("s", rect(0.6, 0.6, 0.9, 0.9))  # pokes outside parent
        img = make_image([make_area("a", rect(0.2, 0.2, 0.8, 0.8), subs=(sub,))])
        assert hit_test(img, (0.7, 0.7), parent=(0,)) == (0, 0)
        # inside the sub-area but outside the parent: clipped away
        assert hit_test(img, (0.85, 0.85), parent=(0,)) is None

    def test_bad_parent_path(self):
        img = make_image([make_area("a", rect(0, 0, 1, 1))])
        with pytest.raises(AnnotationError, match="no such area"):
            hit_test(img, (0.5, 0.5), parent=(3,))

    def test_boundary_inclusive(self):
        img = make_image([make_area("a", rect(0.2, 0.2, 0.8, 0.8))])
        assert hit_test(img, (0.2, 0.5)) == (0,)
        assert hit_test(img, (0.8, 0.8)) == (0,)

    @given(st.integers(0, 100_000))
    @settings(max_examples=300, deadline=None)
    def test_matches_ray_casting_oracle(self, seed):
        rng = random.Random(seed)
        areas = [make_area(f"a{i}", random_polygon(rng)) for i in range(3)]
        img = make_image(areas)
        p = (rng.random(), rng.random())
        got = hit_test(img, p)
        containing = [
            i for i, a in enumerate(areas) if oracle_point_in_polygon(p, a.polygon)
        ]
        if not containing:
            assert got is None
        else:
            assert got is not None
            assert got[0] in containing
            # smallest-wins: returned area is no larger than any other container
            got_area = polygon_area(areas[got[0]].polygon)
            assert all(got_area <= polygon_area(areas[i].polygon) + 1e-12 for i in containing)


class TestProminence:
    def test_constant_field(self):
        cam = CamGrid(rows=3, cols=3, values=(0.7,) * 9)
        a = make_area("a", rect(0.1, 0.1, 0.6, 0.6))
        assert area_prominence(a, cam) == 0.7

    def test_left_two_columns_of_split_grid(self):
        # 4x4 grid: left two columns 0.0, right two columns 1.0; a rectangle
        # covering exactly the left half averages the 8 zero-valued centers.
        values = tuple(0.0 if c < 2 else 1.0 for _ in range(4) for c in range(4))
        cam = CamGrid(rows=4, cols=4, values=values)
        a = make_area("a", rect(0.0, 0.0, 0.5, 1.0))
        # hand oracle: covered centers are columns 0,1 (x=0.125, 0.375), all rows
        assert area_prominence(a, cam) == 0.0

    def test_no_center_inside_falls_back_to_centroid_cell(self):
        cam = CamGrid(rows=2, cols=2, values=(0.1, 0.2, 0.3, 0.4))
        tiny = make_area("t", rect(0.6, 0.6, 0.62, 0.62))  # centroid in cell (1,1)
        assert area_prominence(tiny, cam) == 0.4

    @given(st.integers(0, 100_000))
    @settings(max_examples=200, deadline=None)
    def test_matches_brute_force_exactly(self, seed):
        rng = random.Random(seed)
        rows, cols = rng.randint(2, 12), rng.randint(2, 12)
        values = tuple(rng.random() for _ in range(rows * cols))
        cam = CamGrid(rows=rows, cols=cols, values=values)
        a = make_area("a", random_polygon(rng))
        expected = oracle_area_prominence(a.polygon, rows, cols, list(values))
        got = area_prominence(a, cam)
        if expected is None:
            cx, cy = polygon_centroid(a.polygon)
            r, c = cam.cell_of_point((cx, cy))
            assert got == values[r * cols + c]
        else:
            assert got == expected  # bit-for-bit: same row-major summation


class TestSerialization:
    def test_round_trip_is_stable(self, tmp_path, two_level_image):
        # one save may round to 9 digits; save(load(save(x))) must be a fixed point
        p1, p2 = tmp_path / "a.annot.json", tmp_path / "b.annot.json"
        save_annotation(two_level_image, p1)
        loaded, issues = load_annotation(p1)
        assert not any(i.severity == "error" for i in issues)
        save_annotation(loaded, p2)
        assert p1.read_bytes() == p2.read_bytes()
        assert [a.label for a in loaded.areas] == [a.label for a in two_level_image.areas]
        assert loaded.cam.values == pytest.approx(two_level_image.cam.values, abs=1e-9)

    def test_unknown_key_warns(self):
        doc = {
            "image_id": "x",
            "width_px": 10,
            "height_px": 10,
            "caption": "c",
            "areas": [{"label": "a", "polygon": [[0, 0], [1, 0], [1, 1]], "mystery": 1}],
        }
        img, issues = parse_annotation(doc)
        assert any(i.severity == "warning" and "mystery" in i.message for i in issues)
        assert img.areas[0].label == "a"

    def test_nine_fractional_digits(self, tmp_path):
        img = make_image([make_area("a", ((1 / 3, 0.1), (0.9, 0.1), (0.9, 2 / 3)))])
        path = tmp_path / "img.annot.json"
        save_annotation(img, path)
        raw = path.read_text()
        for token in raw.replace("[", " ").replace("]", " ").replace(",", " ").split():
            if "." in token:
                frac = token.split(".")[1].rstrip("}").rstrip('"')
                assert len(frac) <= 9

    def test_missing_required_fields_reported(self):
        img, issues = parse_annotation({"image_id": "x"})
        assert any(i.severity == "error" for i in issues)

    def test_non_object_root_raises(self):
        with pytest.raises(AnnotationError):
            parse_annotation([1, 2, 3])
