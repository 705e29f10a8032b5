"""Live bridge: a WebSocket service that runs the encode pipeline in real time.

One interactive session drives the instrument; any further sessions are
read-only observers that receive the outbound stream. All inbound messages
funnel through a single command queue, so the total order of arrival defines
engine state. Wire protocol (JSON text frames, all carrying ``"v": 1``):

inbound   {"v":1,"type":"gesture","squeeze":F,"left":F,"right":F}
          {"v":1,"type":"button","id":I,"pressed":B}
          {"v":1,"type":"mode","pressed":B}
outbound  {"v":1,"type":"midi","t_us":N,"bytes":[S,D1,D2],"decoded":TEXT}
          {"v":1,"type":"stats",...counters...,"msgs_per_sec":N}
          {"v":1,"type":"error","message":TEXT}
"""

from __future__ import annotations

import asyncio
import json
import time
from collections import deque
from contextlib import asynccontextmanager
from typing import Deque, Dict, List, Optional, Set

from fastapi import FastAPI, WebSocket, WebSocketDisconnect
from fastapi.staticfiles import StaticFiles

from .config import RunConfig
from .engine import EncodePipeline
from .link import Emission, MICROS_PER_SECOND
from .sensors import NUM_BUTTONS, GestureState

PROTOCOL_VERSION = 1
TICK_SECONDS = 0.01  # re-sample cadence: drains the link, settles debounce
STATS_SECONDS = 1.0
SESSION_SEND_BUFFER = 4096


class _Session:
    def __init__(self, ws: WebSocket, interactive: bool):
        self.ws = ws
        self.interactive = interactive
        self.outbox: asyncio.Queue = asyncio.Queue(maxsize=SESSION_SEND_BUFFER)
        self.dead = False

    def push(self, payload: dict) -> None:
        if self.dead:
            return
        try:
            self.outbox.put_nowait(payload)
        except asyncio.QueueFull:
            self.dead = True  # slow consumer: cut it loose rather than block


class BridgeEngine:
    """Single-driver engine behind the socket sessions."""

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig()
        self.pipeline = EncodePipeline(self.config)
        self._axes = {"squeeze": 0.0, "left": 0.0, "right": 0.0}
        self._buttons = [False] * NUM_BUTTONS
        self._mode = False
        self._t0 = time.monotonic()
        self._emit_times: Deque[int] = deque(maxlen=4096)
        self.sessions: Set[_Session] = set()
        self._controller: Optional[_Session] = None
        # power-on sample: the resting pose is the change-detector baseline,
        # so the first client gesture is a change even if it beats the ticker
        self.pipeline.push(self._gesture(), 0)

    # -- session bookkeeping ------------------------------------------------

    def attach(self, ws: WebSocket) -> _Session:
        interactive = self._controller is None
        session = _Session(ws, interactive)
        if interactive:
            self._controller = session
        self.sessions.add(session)
        return session

    def detach(self, session: _Session) -> None:
        self.sessions.discard(session)
        if self._controller is session:
            self._controller = None  # next connection takes over

    def broadcast(self, payload: dict) -> None:
        for session in list(self.sessions):
            session.push(payload)

    # -- engine driving -----------------------------------------------------

    def now_us(self) -> int:
        return int((time.monotonic() - self._t0) * MICROS_PER_SECOND)

    def _gesture(self) -> GestureState:
        return GestureState(
            squeeze=self._axes["squeeze"],
            left_rot=self._axes["left"],
            right_rot=self._axes["right"],
            buttons=tuple(self._buttons),
            mode=self._mode,
        )

    def _emit(self, emissions: List[Emission]) -> None:
        for e in emissions:
            self._emit_times.append(e.t_us)
            self.broadcast(
                {
                    "v": PROTOCOL_VERSION,
                    "type": "midi",
                    "t_us": e.t_us,
                    "bytes": list(e.data),
                    "decoded": _decode_text(e),
                }
            )

    def tick(self) -> None:
        self._emit(self.pipeline.push(self._gesture(), self.now_us()))

    def send_stats(self) -> None:
        stats = self.pipeline.stats()
        now = self.now_us()
        recent = sum(1 for t in self._emit_times if now - MICROS_PER_SECOND < t <= now)
        self.broadcast(
            {
                "v": PROTOCOL_VERSION,
                "type": "stats",
                "messages_sent": stats.messages_sent,
                "ccs_coalesced": stats.ccs_coalesced,
                "peak_queue_depth": stats.peak_queue_depth,
                "peak_msgs_per_sec": stats.peak_msgs_per_sec,
                "msgs_per_sec": recent,
                "capacity_msgs_per_sec": self.pipeline.queue.link.messages_per_second,
            }
        )

    def handle(self, session: _Session, raw: str) -> None:
        """Apply one inbound frame; errors go back to the sender only."""
        try:
            payload = self._validate(session, raw)
        except ValueError as exc:
            session.push(
                {"v": PROTOCOL_VERSION, "type": "error", "message": str(exc)}
            )
            return
        kind = payload["type"]
        if kind == "gesture":
            self._axes["squeeze"] = float(payload["squeeze"])
            self._axes["left"] = float(payload["left"])
            self._axes["right"] = float(payload["right"])
        elif kind == "button":
            self._buttons[payload["id"]] = payload["pressed"]
        else:  # mode
            self._mode = payload["pressed"]
        self.tick()

    def _validate(self, session: _Session, raw: str) -> dict:
        try:
            payload = json.loads(raw)
        except json.JSONDecodeError:
            raise ValueError("invalid JSON") from None
        if not isinstance(payload, dict):
            raise ValueError("message must be an object")
        if payload.get("v") != PROTOCOL_VERSION:
            raise ValueError(f"unsupported protocol version {payload.get('v')!r}")
        kind = payload.get("type")
        if kind not in ("gesture", "button", "mode"):
            raise ValueError(f"unknown message type {kind!r}")
        if not session.interactive:
            raise ValueError("read-only session: observers cannot send input")
        if kind == "gesture":
            for axis in ("squeeze", "left", "right"):
                value = payload.get(axis)
                if not isinstance(value, (int, float)) or isinstance(value, bool):
                    raise ValueError(f"gesture.{axis} must be a number")
                if not (0.0 <= float(value) <= 1.0):
                    raise ValueError(f"gesture.{axis} must be in [0, 1]")
        elif kind == "button":
            button_id = payload.get("id")
            if not isinstance(button_id, int) or isinstance(button_id, bool):
                raise ValueError("button.id must be an integer")
            if not (0 <= button_id < NUM_BUTTONS):
                raise ValueError(f"button.id must be in 0..{NUM_BUTTONS - 1}")
            if not isinstance(payload.get("pressed"), bool):
                raise ValueError("button.pressed must be a boolean")
        else:
            if not isinstance(payload.get("pressed"), bool):
                raise ValueError("mode.pressed must be a boolean")
        return payload


def _decode_text(e: Emission) -> str:
    from .protocol import describe

    return describe(e.event)


def create_app(config: Optional[RunConfig] = None, ui_dir: Optional[str] = None) -> FastAPI:
    engine = BridgeEngine(config)
    commands: asyncio.Queue = asyncio.Queue()

    async def _engine_loop() -> None:
        while True:
            item = await commands.get()
            kind = item[0]
            if kind == "msg":
                _, session, raw = item
                engine.handle(session, raw)
            elif kind == "tick":
                engine.tick()
            else:
                engine.send_stats()

    async def _ticker() -> None:
        last_stats = time.monotonic()
        while True:
            await asyncio.sleep(TICK_SECONDS)
            commands.put_nowait(("tick",))
            now = time.monotonic()
            if now - last_stats >= STATS_SECONDS:
                last_stats = now
                commands.put_nowait(("stats",))

    @asynccontextmanager
    async def _lifespan(app: FastAPI):
        tasks = [asyncio.create_task(_engine_loop()), asyncio.create_task(_ticker())]
        try:
            yield
        finally:
            for task in tasks:
                task.cancel()

    app = FastAPI(title="squeezebox live bridge", lifespan=_lifespan)
    app.state.engine = engine
    app.state.commands = commands

    @app.websocket("/ws")
    async def _ws(ws: WebSocket) -> None:
        await ws.accept()
        session = engine.attach(ws)
        sender = asyncio.create_task(_send_loop(session))
        try:
            while True:
                raw = await ws.receive_text()
                commands.put_nowait(("msg", session, raw))
        except WebSocketDisconnect:
            pass
        finally:
            engine.detach(session)
            sender.cancel()

    async def _send_loop(session: _Session) -> None:
        while not session.dead:
            payload = await session.outbox.get()
            try:
                await session.ws.send_text(json.dumps(payload))
            except Exception:
                session.dead = True
                engine.detach(session)
                return

    if ui_dir:
        app.mount("/", StaticFiles(directory=ui_dir, html=True), name="panel")

    return app


def serve_live(
    host: str = "127.0.0.1",
    port: int = 8765,
    config: Optional[RunConfig] = None,
    ui_dir: Optional[str] = None,
) -> None:
    """Run the bridge until interrupted. Raises OSError if the port is busy."""
    import uvicorn

    app = create_app(config, ui_dir)
    uvicorn.run(app, host=host, port=port, log_level="warning")
