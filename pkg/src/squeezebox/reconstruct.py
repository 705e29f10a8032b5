"""Inverse path: rebuild controller state from a parsed MIDI event stream.

Axis values are unknown until their first control change arrives (silence
carries no value under change-only transmission). Each known value also gets
a de-quantized normalized estimate through the inverse of the configured
taper. Events outside the device's vocabulary are counted as foreign and
never mutate state.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from .protocol import (
    AXIS_ASSIGNMENT,
    MODE_ASSIGNMENT,
    Axis,
    BUTTON_BASE_CHANNEL,
    BUTTON_BASE_NOTE,
    ControlChange,
    MidiEvent,
    NoteOn,
)
from .sensors import NUM_BUTTONS, SensorConfig, Taper

_ASSIGNMENT_TO_AXIS = {pair: axis for axis, pair in AXIS_ASSIGNMENT.items()}


def invert_axis(value: int, taper: Taper) -> float:
    """Normalized position whose tapered form quantizes back to ``value``."""
    if not (0 <= value <= 127):
        raise ValueError(f"value must be in 0..127, got {value}")
    p = value / 127.0
    if taper is Taper.LINEAR:
        return p
    return (10.0 ** p - 1.0) / 9.0


@dataclass
class ControllerState:
    """Receiver-side mirror of the instrument."""

    values: Dict[Axis, Optional[int]] = field(
        default_factory=lambda: {axis: None for axis in Axis}
    )
    estimates: Dict[Axis, Optional[float]] = field(
        default_factory=lambda: {axis: None for axis in Axis}
    )
    buttons: List[bool] = field(default_factory=lambda: [False] * NUM_BUTTONS)
    mode: bool = False

    def snapshot(self) -> "ControllerState":
        return ControllerState(
            values=dict(self.values),
            estimates=dict(self.estimates),
            buttons=list(self.buttons),
            mode=self.mode,
        )


@dataclass(frozen=True)
class TimelineEntry:
    """Outcome of applying one event: what it was and the state after it."""

    event: MidiEvent
    kind: str  # "axis" | "button" | "mode" | "foreign"
    state: ControllerState


class Reconstructor:
    """Applies parsed events to a ControllerState, one at a time."""

    def __init__(self, config: Optional[SensorConfig] = None):
        self.config = config or SensorConfig()
        self.state = ControllerState()
        self.foreign_events = 0

    def _taper_for(self, axis: Axis) -> Taper:
        calibration = {
            Axis.SQUEEZE: self.config.squeeze,
            Axis.LEFT: self.config.left,
            Axis.RIGHT: self.config.right,
        }[axis]
        return calibration.taper

    def apply(self, event: MidiEvent) -> TimelineEntry:
        kind = "foreign"
        if isinstance(event, ControlChange):
            axis = _ASSIGNMENT_TO_AXIS.get((event.channel, event.controller))
            if axis is not None:
                self.state.values[axis] = event.value
                self.state.estimates[axis] = invert_axis(event.value, self._taper_for(axis))
                kind = "axis"
        elif isinstance(event, NoteOn):
            pressed = event.velocity != 0
            if (event.channel, event.note) == MODE_ASSIGNMENT:
                self.state.mode = pressed
                kind = "mode"
            else:
                index = event.note - BUTTON_BASE_NOTE
                if (
                    0 <= index < NUM_BUTTONS
                    and event.channel == BUTTON_BASE_CHANNEL + index
                ):
                    self.state.buttons[index] = pressed
                    kind = "button"
        if kind == "foreign":
            self.foreign_events += 1
        return TimelineEntry(event=event, kind=kind, state=self.state.snapshot())

    def apply_all(self, events) -> List[TimelineEntry]:
        return [self.apply(e) for e in events]

    @property
    def axis_values(self) -> Tuple[Optional[int], Optional[int], Optional[int]]:
        v = self.state.values
        return (v[Axis.SQUEEZE], v[Axis.LEFT], v[Axis.RIGHT])
