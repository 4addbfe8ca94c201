from __future__ import annotations

import math
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from touchexplore.config import MenuBeaconConfig
from touchexplore.menu import (
    DIRECTION_NAMES,
    beep_interval_ms,
    build_menu,
    direction_phrase,
    direction_sector,
    entry_utterance,
    unexplored_phrase,
)

from .conftest import make_area, make_image, rect
from .oracles import oracle_direction_sector, oracle_menu_order


def quad_image():
    # annotation order: sky, balcony, house, tree (per the ordering examples)
    sky = make_area("sky", rect(0.2, 0.02, 0.9, 0.1))
    balcony = make_area(
        "balcony",
        rect(0.2, 0.2, 0.5, 0.45),
        subs=[
            make_area("railing", rect(0.22, 0.38, 0.48, 0.44)),
            make_area("chair", rect(0.25, 0.25, 0.33, 0.36)),
            make_area("plant", rect(0.38, 0.25, 0.46, 0.36)),
        ],
        recommended=True,
    )
    house = make_area(
        "house",
        rect(0.55, 0.2, 0.9, 0.6),
        subs=[
            make_area("door", rect(0.6, 0.4, 0.68, 0.58)),
            make_area("window", rect(0.72, 0.3, 0.82, 0.42)),
        ],
    )
    tree = make_area("tree", rect(0.3, 0.6, 0.6, 0.95))
    return make_image([sky, balcony, house, tree])


class TestOrdering:
    def test_hints_on_none_explored(self):
        img = quad_image()
        entries = build_menu(img, img.level_paths(None), explored=set(), hints_enabled=True)
        assert [e.label for e in entries] == ["balcony", "house", "sky", "tree"]

    def test_hints_off_annotation_order(self):
        img = quad_image()
        entries = build_menu(img, img.level_paths(None), explored=set(), hints_enabled=False)
        assert [e.label for e in entries] == ["sky", "balcony", "house", "tree"]

    def test_explored_demoted(self):
        img = quad_image()
        entries = build_menu(img, img.level_paths(None), explored={(0,)}, hints_enabled=True)
        assert [e.label for e in entries] == ["balcony", "house", "tree", "sky"]
        assert entries[-1].explored

    def test_sub_count_ties_alphabetical(self):
        img = make_image(
            [
                make_area("zeta", rect(0.2, 0.1, 0.4, 0.3)),
                make_area("alpha", rect(0.5, 0.1, 0.7, 0.3)),
            ]
        )
        entries = build_menu(img, img.level_paths(None), explored=set(), hints_enabled=True)
        assert [e.label for e in entries] == ["alpha", "zeta"]

    @given(st.integers(0, 100_000))
    @settings(max_examples=300, deadline=None)
    def test_matches_comparator_oracle(self, seed):
        rng = random.Random(seed)
        n = rng.randint(1, 8)
        labels = rng.sample(
            ["sky", "tree", "house", "balcony", "river", "door", "cat", "Barn", "apple", "zeta"], n
        )
        areas = []
        for i, lbl in enumerate(labels):
            x0 = 0.2 + 0.07 * i
            subs = tuple(
                make_area(f"{lbl}-s{j}", rect(x0 + 0.005, 0.105 + 0.05 * j, x0 + 0.03, 0.145 + 0.05 * j))
                for j in range(rng.randint(0, 4))
            )
            areas.append(
                make_area(lbl, rect(x0, 0.1, x0 + 0.06, 0.9), subs=subs, recommended=rng.random() < 0.3)
            )
        img = make_image(areas)
        explored = {(i,) for i in range(n) if rng.random() < 0.4}
        hints = rng.random() < 0.5
        entries = build_menu(img, img.level_paths(None), explored=explored, hints_enabled=hints)
        oracle_in = [
            (i, a.label, (i,) in explored, a.recommended, len(a.sub_areas))
            for i, a in enumerate(areas)
        ]
        expected = [e[1] for e in oracle_menu_order(oracle_in, hints)]
        assert [e.label for e in entries] == expected


class TestUtterances:
    def test_plain_entry(self):
        img = quad_image()
        entries = build_menu(img, img.level_paths(None), explored=set(), hints_enabled=False)
        assert entry_utterance(entries[0], hints_enabled=False) == "sky"

    def test_recommended_and_sub_count(self):
        img = quad_image()
        entries = build_menu(img, img.level_paths(None), explored=set(), hints_enabled=True)
        assert entry_utterance(entries[0], hints_enabled=True) == "recommended balcony, 3 sub-areas"
        assert entry_utterance(entries[1], hints_enabled=True) == "house, 2 sub-areas"

    def test_explored_prefix(self):
        img = quad_image()
        entries = build_menu(img, img.level_paths(None), explored={(2,)}, hints_enabled=True)
        assert entry_utterance(entries[-1], hints_enabled=True) == "explored house, 2 sub-areas"

    def test_singular_sub_area(self):
        img = make_image(
            [make_area("a", rect(0.2, 0.2, 0.8, 0.8), subs=[make_area("s", rect(0.3, 0.3, 0.5, 0.5))])]
        )
        entries = build_menu(img, img.level_paths(None), explored=set(), hints_enabled=True)
        assert entry_utterance(entries[0], hints_enabled=True) == "a, 1 sub-area"

    def test_unexplored_phrase(self):
        assert unexplored_phrase(0) == "no more unexplored areas"
        assert unexplored_phrase(1) == "1 unexplored area"
        assert unexplored_phrase(5) == "5 unexplored areas"


class TestBeacon:
    CFG = MenuBeaconConfig()

    def test_interval_endpoints(self):
        assert beep_interval_ms(0.0, self.CFG) == 120
        assert beep_interval_ms(math.sqrt(2), self.CFG) == 900
        assert beep_interval_ms(10.0, self.CFG) == 900  # clamped

    def test_interval_quantized_to_10ms(self):
        for d in [i / 50 * math.sqrt(2) for i in range(51)]:
            assert beep_interval_ms(d, self.CFG) % 10 == 0

    def test_interval_monotone(self):
        prev = -1
        for i in range(200):
            d = i / 199 * math.sqrt(2)
            iv = beep_interval_ms(d, self.CFG)
            assert iv >= prev
            prev = iv

    def test_cardinal_directions(self):
        # screen coordinates: y grows downward
        assert DIRECTION_NAMES[direction_sector(1, 0)] == "right"
        assert DIRECTION_NAMES[direction_sector(0, 1)] == "down"
        assert DIRECTION_NAMES[direction_sector(-1, 0)] == "left"
        assert DIRECTION_NAMES[direction_sector(0, -1)] == "up"
        assert DIRECTION_NAMES[direction_sector(1, -1)] == "up and right"
        assert DIRECTION_NAMES[direction_sector(-1, 1)] == "down and left"

    def test_spec_example_vector(self):
        # finger (0.25, 0.75), target (0.75, 0.25): v = (0.5, -0.5)
        assert DIRECTION_NAMES[direction_sector(0.5, -0.5)] == "up and right"

    @given(st.integers(0, 100_000))
    @settings(max_examples=500, deadline=None)
    def test_sector_matches_oracle(self, seed):
        rng = random.Random(seed)
        vx, vy = rng.uniform(-1, 1), rng.uniform(-1, 1)
        if vx == 0 and vy == 0:
            return
        assert direction_sector(vx, vy) == oracle_direction_sector(vx, vy)

    def test_boundary_ties_go_to_smaller_index(self):
        # exactly between "right" (0) and "down and right" (1): 22.5 degrees
        vx, vy = math.cos(math.radians(22.5)), math.sin(math.radians(22.5))
        assert direction_sector(vx, vy) == 0

    def test_direction_phrase(self):
        assert direction_phrase(0.5, -0.5) == "up and right"
