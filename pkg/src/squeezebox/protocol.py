"""Change-only MIDI event encoding with the instrument's fixed assignments.

Continuous axes go out as control changes on channels 1-3 (controllers
16-18); the ten buttons as note-ons 60-69 on channels 4-13, velocity 127 on
press and 0 on release; the mode button as note 70 on channel 14. A held
button sends nothing after its initial note-on, and an axis is transmitted
only when its 7-bit value actually changed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Union

from .sensors import NUM_BUTTONS, ContinuousSample

PRESS_VELOCITY = 127
RELEASE_VELOCITY = 0


class Axis(Enum):
    SQUEEZE = "squeeze"
    LEFT = "left"
    RIGHT = "right"


#: axis -> (channel, controller)
AXIS_ASSIGNMENT = {
    Axis.SQUEEZE: (1, 16),
    Axis.LEFT: (2, 17),
    Axis.RIGHT: (3, 18),
}

#: mode button -> (channel, note)
MODE_ASSIGNMENT = (14, 70)

BUTTON_BASE_CHANNEL = 4
BUTTON_BASE_NOTE = 60


def button_assignment(index: int) -> tuple:
    """(channel, note) for performance button ``index`` (0..9)."""
    if not (0 <= index < NUM_BUTTONS):
        raise ValueError(f"button index {index} outside 0..{NUM_BUTTONS - 1}")
    return (BUTTON_BASE_CHANNEL + index, BUTTON_BASE_NOTE + index)


def _check_7bit(name: str, value: int) -> None:
    if not (0 <= value <= 127):
        raise ValueError(f"{name} must be in 0..127, got {value}")


@dataclass(frozen=True)
class ControlChange:
    channel: int
    controller: int
    value: int

    def __post_init__(self) -> None:
        if not (1 <= self.channel <= 16):
            raise ValueError(f"channel must be in 1..16, got {self.channel}")
        _check_7bit("controller", self.controller)
        _check_7bit("value", self.value)


@dataclass(frozen=True)
class NoteOn:
    channel: int
    note: int
    velocity: int

    def __post_init__(self) -> None:
        if not (1 <= self.channel <= 16):
            raise ValueError(f"channel must be in 1..16, got {self.channel}")
        _check_7bit("note", self.note)
        _check_7bit("velocity", self.velocity)


MidiEvent = Union[ControlChange, NoteOn]


def describe(event: MidiEvent) -> str:
    """Human-readable one-liner, used in logs and the live bridge."""
    if isinstance(event, ControlChange):
        return f"ControlChange ch={event.channel} cc={event.controller} val={event.value}"
    return f"NoteOn ch={event.channel} note={event.note} vel={event.velocity}"


class Encoder:
    """Encoder state machine: remembers what was last transmitted.

    With ``emit_initial`` off (the default) the first observed value of each
    axis only seeds the change detector; nothing is sent until the value
    actually moves. With it on, the first observation is transmitted as a
    synchronization snapshot. Single-owner; calls are not synchronized.
    """

    def __init__(self, emit_initial: bool = False):
        self.emit_initial = emit_initial
        self._last: dict = {axis: None for axis in Axis}
        self._held = [False] * NUM_BUTTONS
        self._mode_held = False

    def last_sent(self, axis: Axis) -> Optional[int]:
        return self._last[axis]

    def is_held(self, index: int) -> bool:
        return self._held[index]

    @property
    def mode_held(self) -> bool:
        return self._mode_held

    def encode_axis(self, axis: Axis, value: int) -> Optional[ControlChange]:
        _check_7bit("axis value", value)
        last = self._last[axis]
        if last is None:
            self._last[axis] = value
            if not self.emit_initial:
                return None
        elif value == last:
            return None
        self._last[axis] = value
        channel, controller = AXIS_ASSIGNMENT[axis]
        return ControlChange(channel, controller, value)

    def encode_button(self, index: int, pressed: bool) -> Optional[NoteOn]:
        channel, note = button_assignment(index)
        if pressed == self._held[index]:
            return None  # held or already released: no data
        self._held[index] = pressed
        return NoteOn(channel, note, PRESS_VELOCITY if pressed else RELEASE_VELOCITY)

    def encode_mode(self, pressed: bool) -> Optional[NoteOn]:
        if pressed == self._mode_held:
            return None
        self._mode_held = pressed
        channel, note = MODE_ASSIGNMENT
        return NoteOn(channel, note, PRESS_VELOCITY if pressed else RELEASE_VELOCITY)

    def encode_sample(self, sample: ContinuousSample) -> List[MidiEvent]:
        """Encode one sensor reading to an ordered event list.

        Order is fixed: button edges in ascending index, then the mode edge,
        then axes as squeeze, left, right.
        """
        events: List[MidiEvent] = []
        for index, pressed in sorted(sample.button_edges):
            event = self.encode_button(index, pressed)
            if event is not None:
                events.append(event)
        if sample.mode_edge is not None:
            event = self.encode_mode(sample.mode_edge)
            if event is not None:
                events.append(event)
        for axis, value in (
            (Axis.SQUEEZE, sample.squeeze_val),
            (Axis.LEFT, sample.left_val),
            (Axis.RIGHT, sample.right_val),
        ):
            cc = self.encode_axis(axis, value)
            if cc is not None:
                events.append(cc)
        return events
