"""Gesture trace files: CSV with header ``t_ms,squeeze,left,right,buttons,mode``.

One row per sampled pose. ``buttons`` is a bitmask (bit i = button i,
0..1023), ``mode`` is 0 or 1, axis fields are decimal reals in [0, 1] and
``t_ms`` must never decrease. UTF-8, LF line endings.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, List, Tuple, Union

from .sensors import NUM_BUTTONS, GestureState

TRACE_HEADER = ("t_ms", "squeeze", "left", "right", "buttons", "mode")
BUTTON_MASK_MAX = (1 << NUM_BUTTONS) - 1


class TraceError(ValueError):
    """Malformed trace file; carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class TraceRecord:
    t_ms: int
    squeeze: float
    left: float
    right: float
    buttons: int  # bitmask, bit i = button i
    mode: int  # 0 or 1

    def __post_init__(self) -> None:
        if self.t_ms < 0:
            raise ValueError(f"t_ms must be nonnegative, got {self.t_ms}")
        for name in ("squeeze", "left", "right"):
            p = getattr(self, name)
            if not (0.0 <= p <= 1.0):
                raise ValueError(f"{name} must be in [0, 1], got {p}")
        if not (0 <= self.buttons <= BUTTON_MASK_MAX):
            raise ValueError(f"buttons mask out of range: {self.buttons}")
        if self.mode not in (0, 1):
            raise ValueError(f"mode must be 0 or 1, got {self.mode}")

    def gesture(self) -> GestureState:
        return GestureState(
            squeeze=self.squeeze,
            left_rot=self.left,
            right_rot=self.right,
            buttons=tuple(bool(self.buttons >> i & 1) for i in range(NUM_BUTTONS)),
            mode=bool(self.mode),
        )


def _parse_row(row: List[str], line: int) -> TraceRecord:
    if len(row) != len(TRACE_HEADER):
        raise TraceError(f"expected {len(TRACE_HEADER)} fields, got {len(row)}", line)
    try:
        return TraceRecord(
            t_ms=int(row[0]),
            squeeze=float(row[1]),
            left=float(row[2]),
            right=float(row[3]),
            buttons=int(row[4]),
            mode=int(row[5]),
        )
    except ValueError as exc:
        raise TraceError(str(exc), line) from exc


def read_trace(text: str) -> List[TraceRecord]:
    """Parse trace CSV text; raises TraceError with the offending line number."""
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise TraceError("missing header") from None
    if [h.strip() for h in header] != list(TRACE_HEADER):
        raise TraceError(f"bad header {header!r}, expected {','.join(TRACE_HEADER)}", 1)

    records: List[TraceRecord] = []
    for row in reader:
        line = reader.line_num
        if not row:
            continue
        record = _parse_row(row, line)
        if records and record.t_ms < records[-1].t_ms:
            raise TraceError(
                f"t_ms went backwards: {record.t_ms} after {records[-1].t_ms}", line
            )
        records.append(record)
    return records


def load_trace(path: Union[str, Path]) -> List[TraceRecord]:
    return read_trace(Path(path).read_text(encoding="utf-8"))


def format_trace(records: Iterable[TraceRecord]) -> str:
    lines = [",".join(TRACE_HEADER)]
    for r in records:
        lines.append(f"{r.t_ms},{r.squeeze},{r.left},{r.right},{r.buttons},{r.mode}")
    return "\n".join(lines) + "\n"


def save_trace(records: Iterable[TraceRecord], path: Union[str, Path]) -> None:
    Path(path).write_text(format_trace(records), encoding="utf-8", newline="\n")


def gestures(records: Iterable[TraceRecord]) -> List[Tuple[int, GestureState]]:
    """(t_ms, GestureState) pairs for driving a Sampler."""
    return [(r.t_ms, r.gesture()) for r in records]
