"""Command-line harness: validate, replay, simulate, metrics, prominence.

Exit codes: 0 ok, 2 validation error, 3 I/O error.
"""

from __future__ import annotations

import json
import sys

import click

from . import events as ev_mod
from . import hints as hints_mod
from . import metrics as metrics_mod
from . import model as model_mod
from .config import EngineConfig, load_config
from .session import parse_tools, replay
from .simulate import simulate_beacon_guided, simulate_grid

EXIT_VALIDATION = 2
EXIT_IO = 3


def _load_annotation_or_die(path: str, strict: bool = True):
    try:
        image, issues = model_mod.load_annotation(path)
    except (OSError, json.JSONDecodeError, model_mod.AnnotationError) as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(EXIT_IO)
    errors = [i for i in issues if i.severity == "error"]
    if errors and strict:
        for issue in issues:
            click.echo(str(issue), err=True)
        sys.exit(EXIT_VALIDATION)
    return image, issues


def _load_trace_or_die(path: str):
    try:
        return ev_mod.load_trace(path)
    except OSError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(EXIT_IO)
    except (json.JSONDecodeError, ev_mod.TraceError) as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)


def _load_config_or_die(path: str | None) -> EngineConfig:
    if path is None:
        return EngineConfig()
    try:
        return load_config(path)
    except OSError as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(EXIT_IO)
    except (ValueError, TypeError) as exc:
        click.echo(f"error: {path}: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)


def _parse_tools_or_die(spec: str | None):
    try:
        return parse_tools(spec)
    except ValueError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)


@click.group()
def main() -> None:
    """Deterministic engine and replay harness for touchscreen image
    exploration with the menu & beacon, hints, and quadrant zoom tools."""


@main.command()
@click.argument("annot", type=click.Path())
def validate(annot: str) -> None:
    """Check an annotation file; print issues and exit nonzero on errors."""
    image, issues = _load_annotation_or_die(annot, strict=False)
    for issue in issues:
        click.echo(str(issue))
    if any(i.severity == "error" for i in issues):
        sys.exit(EXIT_VALIDATION)
    click.echo(f"ok: {image.image_id}: {len(image.areas)} areas, {len(image.all_paths())} total paths")


@main.command(name="replay")
@click.argument("annot", type=click.Path())
@click.argument("trace", type=click.Path())
@click.option("--tools", default="none", help="comma-separated: menu_beacon,hints,quadrant_zoom (or all/none)")
@click.option("--out", "out_path", type=click.Path(), required=True, help="event log output (.events.jsonl)")
@click.option("--metrics", "metrics_path", type=click.Path(), default=None, help="metrics JSON output")
@click.option("--config", "config_path", type=click.Path(), default=None, help="engine config TOML")
def replay_cmd(annot: str, trace: str, tools: str, out_path: str,
               metrics_path: str | None, config_path: str | None) -> None:
    """Replay a touch trace and write the audio event log."""
    image, _ = _load_annotation_or_die(annot)
    touch = _load_trace_or_die(trace)
    cfg = _load_config_or_die(config_path)
    toolset = _parse_tools_or_die(tools)
    try:
        audio, session_metrics = replay(image, touch, toolset, cfg)
    except ev_mod.TraceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    try:
        ev_mod.write_event_log(audio, out_path)
        if metrics_path:
            with open(metrics_path, "w", encoding="utf-8") as fh:
                fh.write(session_metrics.to_json())
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_IO)
    click.echo(f"wrote {len(audio)} events to {out_path}")


@main.command()
@click.argument("annot", type=click.Path())
@click.option("--strategy", required=True, help="grid:<pitch> or beacon")
@click.option("--tools", default=None, help="tool set; defaults to none for grid, menu_beacon for beacon")
@click.option("--out-trace", "trace_path", type=click.Path(), default=None)
@click.option("--out", "log_path", type=click.Path(), default=None, help="event log output")
@click.option("--metrics", "metrics_path", type=click.Path(), default=None)
@click.option("--config", "config_path", type=click.Path(), default=None)
@click.option("--seed", type=int, default=0, show_default=True,
              help="accepted for interface stability; strategies are deterministic")
def simulate(annot: str, strategy: str, tools: str | None, trace_path: str | None,
             log_path: str | None, metrics_path: str | None, config_path: str | None,
             seed: int) -> None:
    """Run a synthetic exploration strategy and write its trace/metrics."""
    image, _ = _load_annotation_or_die(annot)
    cfg = _load_config_or_die(config_path)
    if strategy.startswith("grid:"):
        pitch = float(strategy.split(":", 1)[1])
        toolset = _parse_tools_or_die(tools) if tools is not None else frozenset()
        trace, audio, session_metrics = simulate_grid(image, pitch, toolset, cfg)
    elif strategy in ("beacon", "beacon_guided"):
        toolset = _parse_tools_or_die(tools) if tools is not None else frozenset({"menu_beacon"})
        trace, audio, session_metrics = simulate_beacon_guided(image, toolset, cfg)
    else:
        click.echo(f"error: unknown strategy {strategy!r}", err=True)
        sys.exit(EXIT_VALIDATION)
    try:
        if trace_path:
            ev_mod.save_trace(trace, trace_path)
        if log_path:
            ev_mod.write_event_log(audio, log_path)
        if metrics_path:
            with open(metrics_path, "w", encoding="utf-8") as fh:
                fh.write(session_metrics.to_json())
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_IO)
    click.echo(session_metrics.to_json(), nl=False)


@main.command(name="metrics")
@click.argument("log", type=click.Path())
@click.option("--annot", "annot_path", type=click.Path(), default=None,
              help="annotation file (needed for coverage)")
@click.option("--trace", "trace_path", type=click.Path(), default=None,
              help="touch trace (needed for duration and scroll deciles)")
@click.option("--config", "config_path", type=click.Path(), default=None)
def metrics_cmd(log: str, annot_path: str | None, trace_path: str | None,
                config_path: str | None) -> None:
    """Recompute session metrics from replay artifacts."""
    try:
        log_events = ev_mod.read_event_log(log)
    except OSError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_IO)
    cfg = _load_config_or_die(config_path)
    if annot_path and trace_path:
        image, _ = _load_annotation_or_die(annot_path)
        trace = _load_trace_or_die(trace_path)
        m = metrics_mod.metrics_from_artifacts(image, trace, log_events, cfg)
        click.echo(m.to_json(), nl=False)
    else:
        beacons = sum(1 for e in log_events if e.type == "speech" and e.payload["text"] == "in beacon mode")
        duration = log_events[-1].time_ms if log_events else 0
        click.echo(json.dumps({"duration_ms": duration, "beacons_placed": beacons},
                              separators=(",", ":")))


@main.command()
@click.argument("annot", type=click.Path())
@click.option("--in-place", is_flag=True, help="rewrite the annotation file with baked values")
@click.option("--out", "out_path", type=click.Path(), default=None)
def prominence(annot: str, in_place: bool, out_path: str | None) -> None:
    """Bake CAM prominence values into per-area fields."""
    image, _ = _load_annotation_or_die(annot)
    try:
        table = hints_mod.bake_prominence(image)
    except hints_mod.ProminenceError as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(EXIT_VALIDATION)
    hints_mod.write_prominence(image, table)
    target = annot if in_place else out_path
    if target:
        try:
            model_mod.save_annotation(image, target)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(EXIT_IO)
        click.echo(f"wrote {target}")
    else:
        click.echo(json.dumps(model_mod.annotation_to_dict(image), indent=2))


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8765, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the local engine service used by the browser explorer."""
    import uvicorn

    from .server import create_app

    uvicorn.run(create_app(), host=host, port=port, log_level="warning")


if __name__ == "__main__":
    main()
