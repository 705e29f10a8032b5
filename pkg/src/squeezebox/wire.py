"""MIDI 1.0 byte-stream codec.

The encoder always emits full 3-byte messages (no running status), which
keeps the link budget exact at 3 bytes per event. The parser is the tolerant
inverse: it accepts running status, passes system real-time bytes through
transparently, normalizes note-off to note-on velocity 0, and resynchronizes
on the next status byte after garbage instead of failing.
"""

from __future__ import annotations

from typing import Iterable, List, Optional

from .protocol import ControlChange, MidiEvent, NoteOn

# Status nibbles (high 4 bits); low nibble = channel - 1.
NOTE_OFF = 0x80
NOTE_ON = 0x90
CONTROL_CHANGE = 0xB0

_TWO_DATA_STATUSES = (NOTE_OFF, NOTE_ON, CONTROL_CHANGE)


def serialize(event: MidiEvent) -> bytes:
    """Encode one event as its 3-byte wire form."""
    if isinstance(event, ControlChange):
        return bytes((CONTROL_CHANGE | (event.channel - 1), event.controller, event.value))
    if isinstance(event, NoteOn):
        return bytes((NOTE_ON | (event.channel - 1), event.note, event.velocity))
    raise ValueError(f"cannot serialize {event!r}")


class StreamParser:
    """Streaming decoder with running status and resynchronization.

    Feed bytes in any chunking; completed events come back as they finish.
    Bytes that cannot contribute to an event (orphan data bytes, statuses
    outside the note-on/note-off/control-change vocabulary, system common
    and exclusive messages, abandoned partial messages) are counted in
    ``skipped_bytes`` and never raise.
    """

    def __init__(self) -> None:
        self._status: Optional[int] = None
        self._pending: List[int] = []
        self.skipped_bytes = 0

    def _abandon_pending(self) -> None:
        self.skipped_bytes += len(self._pending)
        self._pending = []

    def feed(self, byte: int) -> List[MidiEvent]:
        """Consume one byte; return any events it completed."""
        if not (0 <= byte <= 0xFF):
            raise ValueError(f"byte out of range: {byte}")

        if byte >= 0xF8:  # system real-time: transparent, even mid-message
            return []

        if byte >= 0xF0:  # system common / exclusive: skip, cancel running status
            self._abandon_pending()
            self._status = None
            self.skipped_bytes += 1
            return []

        if byte >= 0x80:  # voice status byte
            self._abandon_pending()
            if (byte & 0xF0) in _TWO_DATA_STATUSES:
                self._status = byte
            else:
                # Outside the device vocabulary; resync at the next status.
                self._status = None
                self.skipped_bytes += 1
            return []

        # Data byte.
        if self._status is None:
            self.skipped_bytes += 1
            return []
        self._pending.append(byte)
        if len(self._pending) < 2:
            return []
        d1, d2 = self._pending
        self._pending = []  # running status stays armed for the next pair
        return [self._build(self._status, d1, d2)]

    def feed_bytes(self, data: Iterable[int]) -> List[MidiEvent]:
        events: List[MidiEvent] = []
        for byte in data:
            events.extend(self.feed(byte))
        return events

    @staticmethod
    def _build(status: int, d1: int, d2: int) -> MidiEvent:
        kind = status & 0xF0
        channel = (status & 0x0F) + 1
        if kind == CONTROL_CHANGE:
            return ControlChange(channel, d1, d2)
        if kind == NOTE_ON:
            return NoteOn(channel, d1, d2)
        # Note-off: semantically a release; normalize so downstream state
        # tracking sees the device's own release encoding.
        return NoteOn(channel, d1, 0)
