#!/usr/bin/env python3
"""Run every bundled sample through the synthetic exploration strategies
and print a coverage/effort table.

Usage: python3 scripts/compare_strategies.py [--json]
"""

from __future__ import annotations

import argparse
import json
import time
from pathlib import Path

from touchexplore.engine import MENU_BEACON
from touchexplore.model import load_annotation
from touchexplore.simulate import simulate_beacon_guided, simulate_grid

SAMPLES = Path(__file__).resolve().parents[1] / "samples"
PITCHES = (0.3, 0.15, 0.05)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--json", action="store_true", help="emit machine-readable results")
    args = parser.parse_args()

    rows = []
    for path in sorted(SAMPLES.glob("*.annot.json")):
        image, issues = load_annotation(path)
        if any(i.severity == "error" for i in issues):
            raise SystemExit(f"{path.name}: invalid annotation")
        name = path.name.removesuffix(".annot.json")
        for pitch in PITCHES:
            start = time.perf_counter()
            trace, _, m = simulate_grid(image, pitch)
            rows.append((name, f"grid({pitch})", m, len(trace), time.perf_counter() - start))
        start = time.perf_counter()
        trace, _, m = simulate_beacon_guided(image, frozenset({MENU_BEACON}))
        rows.append((name, "beacon", m, len(trace), time.perf_counter() - start))

    if args.json:
        print(json.dumps([
            {"image": img, "strategy": strat, "coverage_pct": m.coverage_pct,
             "duration_ms": m.duration_ms, "touch_events": n, "wall_s": round(dt, 3)}
            for img, strat, m, n, dt in rows
        ], indent=2))
        return

    header = f"{'image':<12} {'strategy':<12} {'coverage':>9} {'session':>10} {'events':>8} {'wall':>7}"
    print(header)
    print("-" * len(header))
    for img, strat, m, n, dt in rows:
        print(f"{img:<12} {strat:<12} {m.coverage_pct:>8.1f}% {m.duration_ms/1000:>9.1f}s "
              f"{n:>8} {dt:>6.2f}s")


if __name__ == "__main__":
    main()
