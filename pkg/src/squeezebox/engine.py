"""Drivers that wire the whole signal path together.

Encode direction: gesture records -> Sampler -> Encoder -> TxQueue -> timed
byte log. Decode direction: raw bytes -> StreamParser -> Reconstructor ->
timeline text. Both are deterministic functions of their inputs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from .config import RunConfig
from .link import Emission, LinkStats, TxQueue
from .protocol import Axis, Encoder, describe
from .reconstruct import Reconstructor, TimelineEntry
from .sensors import GestureState, Sampler
from .traces import TraceRecord
from .wire import StreamParser

US_PER_MS = 1000


class EncodePipeline:
    """Live-capable pipeline: push timestamped gestures, collect emissions.

    Each push first drains messages whose transmission completes before the
    new timestamp (so coalescing happens exactly while values wait for the
    wire), then samples and enqueues the new events.
    """

    def __init__(self, config: Optional[RunConfig] = None):
        self.config = config or RunConfig()
        self.sampler = Sampler(self.config.sensor)
        self.encoder = Encoder(emit_initial=self.config.emit_initial)
        self.queue = TxQueue(self.config.link())
        self.events_encoded = 0

    def push(self, gesture: GestureState, t_us: int) -> List[Emission]:
        emissions = self.queue.drain(t_us)
        sample = self.sampler.sample(gesture, t_us / US_PER_MS)
        for event in self.encoder.encode_sample(sample):
            self.queue.enqueue(event, t_us)
            self.events_encoded += 1
        return emissions

    def flush(self) -> List[Emission]:
        return self.queue.drain_all()

    def stats(self) -> LinkStats:
        return self.queue.stats()


@dataclass(frozen=True)
class EncodeResult:
    emissions: Tuple[Emission, ...]
    stats: LinkStats
    events_encoded: int


def run_encode(records: Iterable[TraceRecord], config: Optional[RunConfig] = None) -> EncodeResult:
    pipeline = EncodePipeline(config)
    emissions: List[Emission] = []
    for record in records:
        emissions.extend(pipeline.push(record.gesture(), record.t_ms * US_PER_MS))
    emissions.extend(pipeline.flush())
    return EncodeResult(
        emissions=tuple(emissions),
        stats=pipeline.stats(),
        events_encoded=pipeline.events_encoded,
    )


def format_emission(e: Emission) -> str:
    hex_bytes = " ".join(f"{b:02X}" for b in e.data)
    return f"{e.t_us} {hex_bytes} # {describe(e.event)}"


def format_encode_log(result: EncodeResult, output_format: str = "text") -> str:
    if output_format == "jsonl":
        lines = [
            json.dumps(
                {"t_us": e.t_us, "bytes": list(e.data), "decoded": describe(e.event)}
            )
            for e in result.emissions
        ]
    else:
        lines = [format_emission(e) for e in result.emissions]
    return "".join(line + "\n" for line in lines)


def parse_encode_log(text: str) -> bytes:
    """Recover the raw byte stream from a timed byte log."""
    data = bytearray()
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        for token in fields[1:]:  # first field is t_us
            data.append(int(token, 16))
    return bytes(data)


@dataclass(frozen=True)
class DecodeResult:
    entries: Tuple[TimelineEntry, ...]  # accepted events only
    foreign_events: int
    skipped_bytes: int


def run_decode(data: bytes, config: Optional[RunConfig] = None) -> DecodeResult:
    config = config or RunConfig()
    parser = StreamParser()
    reconstructor = Reconstructor(config.sensor)
    accepted: List[TimelineEntry] = []
    for event in parser.feed_bytes(data):
        entry = reconstructor.apply(event)
        if entry.kind != "foreign":
            accepted.append(entry)
    return DecodeResult(
        entries=tuple(accepted),
        foreign_events=reconstructor.foreign_events,
        skipped_bytes=parser.skipped_bytes,
    )


def _axis_cell(entry: TimelineEntry, axis: Axis) -> str:
    value = entry.state.values[axis]
    return "-" if value is None else str(value)


def format_timeline(result: DecodeResult, output_format: str = "text") -> str:
    """One line per accepted event plus a trailer with the diagnostics."""
    lines: List[str] = []
    if output_format == "jsonl":
        for seq, entry in enumerate(result.entries, start=1):
            state = entry.state
            lines.append(
                json.dumps(
                    {
                        "seq": seq,
                        "event": describe(entry.event),
                        "kind": entry.kind,
                        "squeeze": state.values[Axis.SQUEEZE],
                        "left": state.values[Axis.LEFT],
                        "right": state.values[Axis.RIGHT],
                        "buttons": sum(1 << i for i, b in enumerate(state.buttons) if b),
                        "mode": int(state.mode),
                    }
                )
            )
        lines.append(
            json.dumps(
                {
                    "events": len(result.entries),
                    "foreign": result.foreign_events,
                    "skipped_bytes": result.skipped_bytes,
                }
            )
        )
    else:
        lines.append("# timeline v=1")
        for seq, entry in enumerate(result.entries, start=1):
            state = entry.state
            bits = "".join("1" if b else "0" for b in reversed(state.buttons))
            lines.append(
                f"{seq} {describe(entry.event)}"
                f" | sq={_axis_cell(entry, Axis.SQUEEZE)}"
                f" lt={_axis_cell(entry, Axis.LEFT)}"
                f" rt={_axis_cell(entry, Axis.RIGHT)}"
                f" btn={bits} mode={int(state.mode)}"
            )
        lines.append(
            f"# events={len(result.entries)} foreign={result.foreign_events}"
            f" skipped_bytes={result.skipped_bytes}"
        )
    return "".join(line + "\n" for line in lines)
