"""Serial MIDI link model: 31250 baud, 10 bits per byte on the wire, so a
3-byte message occupies 960 us and the link tops out at 1041 messages per
second.

The queue realizes the firmware policy under saturation: note events are
discrete and must never be lost, so they go through a FIFO untouched;
continuous controller values are self-correcting, so an unsent value is
overwritten (coalesced) by a newer one for the same controller. Ready notes
drain before ready controller values. All timekeeping is integer
microseconds.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Deque, Dict, List, Optional, Tuple

from .protocol import ControlChange, MidiEvent, NoteOn
from .wire import serialize

MICROS_PER_SECOND = 1_000_000


@dataclass(frozen=True)
class LinkModel:
    baud: int = 31250
    bits_per_byte: int = 10  # start + 8 data + stop

    def __post_init__(self) -> None:
        if self.baud <= 0:
            raise ValueError("baud must be positive")

    @property
    def byte_time_us(self) -> int:
        # Exact for MIDI's 31250 baud (320 us); rounded for odd overrides.
        return round(self.bits_per_byte * MICROS_PER_SECOND / self.baud)

    @property
    def message_time_us(self) -> int:
        return 3 * self.byte_time_us

    @property
    def messages_per_second(self) -> int:
        return self.baud // (self.bits_per_byte * 3)


@dataclass(frozen=True)
class Emission:
    """One transmitted message; ``t_us`` is when its last byte left the wire."""

    t_us: int
    data: bytes
    event: MidiEvent


@dataclass(frozen=True)
class LinkStats:
    messages_sent: int
    ccs_coalesced: int
    peak_queue_depth: int
    peak_msgs_per_sec: int


class TxQueue:
    """Transmit queue in front of the modeled serial link.

    Single-owner: one producer and one drainer alternating. ``enqueue``
    timestamps must be nondecreasing, as must successive ``drain`` times.
    """

    def __init__(self, link: Optional[LinkModel] = None):
        self.link = link or LinkModel()
        self._notes: Deque[Tuple[int, NoteOn]] = deque()  # (ready_us, event)
        self._cc: Dict[Tuple[int, int], Tuple[int, int]] = {}  # slot -> (ready_us, value)
        self._next_free_us = 0
        self._last_enqueue_us: Optional[int] = None
        self._last_drain_us: Optional[int] = None
        self._sent = 0
        self._coalesced = 0
        self._peak_depth = 0
        self._emit_times: List[int] = []

    def __len__(self) -> int:
        return len(self._notes) + len(self._cc)

    def enqueue(self, event: MidiEvent, t_us: int) -> None:
        if self._last_enqueue_us is not None and t_us < self._last_enqueue_us:
            raise ValueError(
                f"enqueue time went backwards: {t_us} < {self._last_enqueue_us}"
            )
        self._last_enqueue_us = t_us
        if isinstance(event, NoteOn):
            self._notes.append((t_us, event))
        elif isinstance(event, ControlChange):
            slot = (event.channel, event.controller)
            if slot in self._cc:
                ready, _ = self._cc[slot]
                self._cc[slot] = (ready, event.value)  # keep slot position, newest value
                self._coalesced += 1
            else:
                self._cc[slot] = (t_us, event.value)
        else:
            raise ValueError(f"cannot enqueue {event!r}")
        self._peak_depth = max(self._peak_depth, len(self))

    def _pop_next(self, now_us: Optional[int]) -> Optional[Tuple[int, MidiEvent]]:
        # Enqueue times are monotone, so the FIFO head / first slot are the
        # earliest-ready of their kind.
        note_ready = self._notes[0][0] if self._notes else None
        cc_slot = next(iter(self._cc)) if self._cc else None
        cc_ready = self._cc[cc_slot][0] if cc_slot is not None else None
        if note_ready is None and cc_ready is None:
            return None

        earliest = min(r for r in (note_ready, cc_ready) if r is not None)
        start = max(self._next_free_us, earliest)
        end = start + self.link.message_time_us
        if now_us is not None and end > now_us:
            return None  # transmission would not complete in time

        # Among events ready by the start instant, notes take priority.
        if note_ready is not None and note_ready <= start:
            _, event = self._notes.popleft()
        else:
            ready, value = self._cc.pop(cc_slot)
            event = ControlChange(cc_slot[0], cc_slot[1], value)
        self._next_free_us = end
        return end, event

    def _drain(self, now_us: Optional[int]) -> List[Emission]:
        out: List[Emission] = []
        while True:
            item = self._pop_next(now_us)
            if item is None:
                break
            t_emit, event = item
            out.append(Emission(t_emit, serialize(event), event))
            self._sent += 1
            self._emit_times.append(t_emit)
        return out

    def drain(self, now_us: int) -> List[Emission]:
        """Emit every message whose 3 bytes fit entirely before ``now_us``."""
        if self._last_drain_us is not None and now_us < self._last_drain_us:
            raise ValueError(
                f"drain time went backwards: {now_us} < {self._last_drain_us}"
            )
        self._last_drain_us = now_us
        return self._drain(now_us)

    def drain_all(self) -> List[Emission]:
        """Flush the queue completely, however long the link needs."""
        return self._drain(None)

    def stats(self) -> LinkStats:
        return LinkStats(
            messages_sent=self._sent,
            ccs_coalesced=self._coalesced,
            peak_queue_depth=self._peak_depth,
            peak_msgs_per_sec=self._peak_rate(),
        )

    def _peak_rate(self) -> int:
        """Most messages whose transmissions fit entirely in any 1 s window."""
        times = self._emit_times  # ascending completion times
        if not times:
            return 0
        msg_us = self.link.message_time_us
        peak = 0
        j = 0
        for i in range(len(times)):
            window_end = times[i] - msg_us + MICROS_PER_SECOND
            while j < len(times) and times[j] <= window_end:
                j += 1
            peak = max(peak, j - i)
        return peak
