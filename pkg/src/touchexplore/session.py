"""Deterministic replay: trace in, event log and metrics out."""

from __future__ import annotations

from .config import EngineConfig
from .engine import Engine
from .events import AudioEvent, TouchEvent
from .metrics import SessionMetrics, compute_metrics
from .model import AnnotatedImage


def replay(image: AnnotatedImage, trace: list[TouchEvent], tools: frozenset | set = frozenset(),
           config: EngineConfig | None = None) -> tuple[list[AudioEvent], SessionMetrics]:
    """Feed a touch trace through classification and the engine.

    Pure function of its inputs: no clock, no randomness, so the returned
    event list serializes identically across runs and platforms.
    """
    engine = Engine(image, tools, config)
    audio: list[AudioEvent] = []
    for ev in trace:
        audio.extend(engine.handle_touch(ev))
    audio.extend(engine.finish())
    return audio, compute_metrics(image, engine, trace)


def parse_tools(spec: str | None) -> frozenset:
    """Parse a --tools flag value: comma-separated tool names, `all`, or
    `none`/empty."""
    from .engine import ALL_TOOLS

    if not spec or spec == "none":
        return frozenset()
    if spec == "all":
        return ALL_TOOLS
    alias = {"zoom": "quadrant_zoom", "beacon": "menu_beacon"}
    tools = set()
    for name in spec.split(","):
        name = name.strip()
        if not name:
            continue
        name = alias.get(name, name)
        if name not in ALL_TOOLS:
            raise ValueError(f"unknown tool {name!r}")
        tools.add(name)
    return frozenset(tools)
