"""Local HTTP service exposing the engine to the browser explorer.

The wire format is exactly the trace / event-log schema: the client
posts raw touch events and receives the audio events they produced, in
order; the full log is re-downloadable for export and replay parity.
"""

from __future__ import annotations

import json
import uuid

from fastapi import FastAPI, HTTPException
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel

from .engine import Engine
from .events import AudioEvent, TouchEvent, TraceError
from .model import parse_annotation
from .session import parse_tools


class SessionRequest(BaseModel):
    annotation: dict
    tools: str = "none"


class TouchBatch(BaseModel):
    events: list[dict]


class _LiveSession:
    def __init__(self, engine: Engine):
        self.engine = engine
        self.audio: list[AudioEvent] = []
        self.trace: list[TouchEvent] = []


def _audio_json(events: list[AudioEvent]) -> list[dict]:
    return [json.loads(ev.to_json()) for ev in events]


def create_app() -> FastAPI:
    app = FastAPI(title="touchexplore engine service")
    app.add_middleware(CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"])
    sessions: dict[str, _LiveSession] = {}

    def get_session(session_id: str) -> _LiveSession:
        if session_id not in sessions:
            raise HTTPException(status_code=404, detail="no such session")
        return sessions[session_id]

    @app.post("/session")
    def create_session(req: SessionRequest) -> dict:
        try:
            image, issues = parse_annotation(req.annotation)
            tools = parse_tools(req.tools)
        except (ValueError, TypeError) as exc:
            raise HTTPException(status_code=422, detail=str(exc))
        errors = [str(i) for i in issues if i.severity == "error"]
        if errors:
            raise HTTPException(status_code=422, detail="; ".join(errors))
        session_id = uuid.uuid4().hex
        sessions[session_id] = _LiveSession(Engine(image, tools))
        return {
            "session_id": session_id,
            "image_id": image.image_id,
            "caption": image.caption,
            "tools": sorted(tools),
            "warnings": [str(i) for i in issues],
        }

    @app.post("/session/{session_id}/touch")
    def post_touch(session_id: str, batch: TouchBatch) -> dict:
        live = get_session(session_id)
        out: list[AudioEvent] = []
        for obj in batch.events:
            try:
                ev = TouchEvent(int(obj["t"]), int(obj["p"]), str(obj["phase"]), float(obj["x"]), float(obj["y"]))
                produced = live.engine.handle_touch(ev)
            except (KeyError, ValueError, TraceError) as exc:
                raise HTTPException(status_code=422, detail=str(exc))
            live.trace.append(ev)
            out.extend(produced)
        live.audio.extend(out)
        return {"events": _audio_json(out)}

    @app.post("/session/{session_id}/finish")
    def finish(session_id: str) -> dict:
        live = get_session(session_id)
        produced = live.engine.finish()
        live.audio.extend(produced)
        return {"events": _audio_json(produced)}

    @app.get("/session/{session_id}/log")
    def get_log(session_id: str) -> dict:
        live = get_session(session_id)
        return {"events": _audio_json(live.audio)}

    @app.get("/session/{session_id}/trace")
    def get_trace(session_id: str) -> dict:
        live = get_session(session_id)
        return {
            "events": [
                {"t": e.time_ms, "p": e.pointer_id, "phase": e.phase, "x": round(e.x, 9), "y": round(e.y, 9)}
                for e in live.trace
            ]
        }

    @app.delete("/session/{session_id}")
    def close(session_id: str) -> dict:
        sessions.pop(session_id, None)
        return {"ok": True}

    return app
