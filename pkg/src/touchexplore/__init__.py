"""Deterministic engine and harness for non-visual touchscreen image
exploration: hierarchical area announcements plus the menu & beacon,
hints, and quadrant zoom tools."""

from .config import EngineConfig, TimingConfig
from .engine import ALL_TOOLS, Engine, ExplorationState, recompute_explored
from .events import AudioEvent, TouchEvent
from .metrics import SessionMetrics
from .model import (AnnotatedImage, Area, CamGrid, ValidationIssue,
                    area_prominence, hit_test, load_annotation, validate)
from .session import replay

__all__ = [
    "ALL_TOOLS",
    "AnnotatedImage",
    "Area",
    "AudioEvent",
    "CamGrid",
    "Engine",
    "EngineConfig",
    "ExplorationState",
    "SessionMetrics",
    "TimingConfig",
    "TouchEvent",
    "ValidationIssue",
    "area_prominence",
    "hit_test",
    "load_annotation",
    "recompute_explored",
    "replay",
    "validate",
]
