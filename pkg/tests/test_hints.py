from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from touchexplore.config import HintsConfig
from touchexplore.events import speech
from touchexplore.hints import (
    ProminenceError,
    bake_prominence,
    first_touch_decorate,
    speech_volume,
)
from touchexplore.model import CamGrid

from .conftest import make_area, make_image, random_polygon, rect
from .oracles import oracle_area_prominence

CFG = HintsConfig()


def cam_image():
    # 2x2 CAM; areas sit inside single cells so prominences are the cell values
    cam = CamGrid(rows=2, cols=2, values=(0.2, 0.8, 0.4, 0.6))
    a = make_area("low", rect(0.05, 0.05, 0.45, 0.45))  # cell (0,0) = 0.2
    b = make_area("high", rect(0.55, 0.05, 0.95, 0.45))  # cell (0,1) = 0.8
    c = make_area("mid", rect(0.05, 0.55, 0.45, 0.95))  # cell (1,0) = 0.4
    return make_image([a, b, c], cam=cam)


class TestProminenceTable:
    def test_bake_values(self):
        table = bake_prominence(cam_image())
        assert table.values[(0,)] == pytest.approx(0.2)
        assert table.values[(1,)] == pytest.approx(0.8)
        assert table.min_value == pytest.approx(0.2)
        assert table.max_value == pytest.approx(0.8)

    def test_bake_without_cam_raises(self):
        img = make_image([make_area("a", rect(0.2, 0.2, 0.8, 0.8))])
        with pytest.raises(ProminenceError, match="no CAM grid"):
            bake_prominence(img)

    @given(st.integers(0, 10_000))
    @settings(max_examples=100, deadline=None)
    def test_bake_matches_oracle(self, seed):
        rng = random.Random(seed)
        rows, cols = rng.randint(2, 8), rng.randint(2, 8)
        values = tuple(rng.random() for _ in range(rows * cols))
        img = make_image(
            [make_area(f"a{i}", random_polygon(rng)) for i in range(3)],
            cam=CamGrid(rows=rows, cols=cols, values=values),
        )
        table = bake_prominence(img)
        for i, area in enumerate(img.areas):
            expected = oracle_area_prominence(area.polygon, rows, cols, list(values))
            if expected is not None:
                assert table.values[(i,)] == expected


class TestVolume:
    def test_endpoints_and_midpoint(self):
        table = bake_prominence(cam_image())
        assert speech_volume(table, (1,), CFG) == pytest.approx(1.0)  # max prominence
        assert speech_volume(table, (0,), CFG) == pytest.approx(0.3)  # min prominence
        # mid: (0.4-0.2)/(0.8-0.2)=1/3 -> 0.3 + 0.7/3
        assert speech_volume(table, (2,), CFG) == pytest.approx(0.3 + 0.7 / 3)

    def test_degenerate_uniform_cam_uses_full_volume(self):
        img = make_image(
            [make_area("a", rect(0.1, 0.1, 0.5, 0.5)), make_area("b", rect(0.6, 0.6, 0.9, 0.9))],
            cam=CamGrid(rows=2, cols=2, values=(0.5, 0.5, 0.5, 0.5)),
        )
        table = bake_prominence(img)
        assert speech_volume(table, (0,), CFG) == 1.0
        assert speech_volume(table, (1,), CFG) == 1.0

    @given(st.integers(0, 10_000))
    @settings(max_examples=100, deadline=None)
    def test_volume_always_in_range(self, seed):
        rng = random.Random(seed)
        img = make_image(
            [make_area(f"a{i}", random_polygon(rng)) for i in range(4)],
            cam=CamGrid(rows=4, cols=4, values=tuple(rng.random() for _ in range(16))),
        )
        table = bake_prominence(img)
        for i in range(4):
            v = speech_volume(table, (i,), CFG)
            assert CFG.volume_floor - 1e-12 <= v <= CFG.volume_ceiling + 1e-12


class TestFirstTouch:
    def test_earcon_precedes_name_on_first_touch(self):
        s = speech(100, "tree")
        out = first_touch_decorate(set(), (0,), s)
        assert [e.type for e in out] == ["earcon", "speech"]
        assert out[0].payload["kind"] == "first_touch"
        assert out[0].time_ms == 100

    def test_no_earcon_on_repeat_touch(self):
        s = speech(100, "tree")
        out = first_touch_decorate({(0,)}, (0,), s)
        assert [e.type for e in out] == ["speech"]
