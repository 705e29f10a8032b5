"""Analog front end model: pot tapers, op-amp range scaling, ADC quantization,
truncation to 7-bit MIDI values, and contact debouncing for the buttons.

The squeeze axis is read through a logarithmic pot, both rotation axes through
linear ones. Each axis voltage is scaled by an op-amp stage (modeled as a
clamped affine map), digitized by a 12-bit ADC and truncated to the top 7 bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

NUM_BUTTONS = 10


class Taper(Enum):
    """Pot resistance-vs-rotation curve."""

    LINEAR = "linear"
    LOGARITHMIC = "logarithmic"


@dataclass(frozen=True)
class AxisCalibration:
    """Per-axis taper plus the op-amp stage's gain/offset (offset in volts)."""

    taper: Taper
    gain: float = 1.0
    offset: float = 0.0

    def __post_init__(self) -> None:
        if not (self.gain > 0):
            raise ValueError(f"gain must be > 0, got {self.gain}")


@dataclass(frozen=True)
class SensorConfig:
    supply: float = 5.0  # [V]
    adc_bits: int = 12
    retained_bits: int = 7
    debounce_ms: float = 5.0
    squeeze: AxisCalibration = AxisCalibration(Taper.LOGARITHMIC)
    left: AxisCalibration = AxisCalibration(Taper.LINEAR)
    right: AxisCalibration = AxisCalibration(Taper.LINEAR)

    def __post_init__(self) -> None:
        if self.retained_bits > self.adc_bits:
            raise ValueError(
                f"retained_bits ({self.retained_bits}) exceeds adc_bits ({self.adc_bits})"
            )
        if self.retained_bits < 1:
            raise ValueError("retained_bits must be >= 1")
        if self.supply <= 0:
            raise ValueError("supply must be positive")
        if self.debounce_ms < 0:
            raise ValueError("debounce_ms must be nonnegative")

    @property
    def full_code(self) -> int:
        return (1 << self.adc_bits) - 1

    @property
    def max_value(self) -> int:
        return (1 << self.retained_bits) - 1


@dataclass(frozen=True)
class GestureState:
    """Physical pose of the instrument.

    All three axes are normalized to [0, 1]; for the squeeze axis 0 means
    fully closed and 1 fully extended. ``buttons`` holds the 10 performance
    buttons in index order, ``mode`` the extra non-performance button.
    """

    squeeze: float
    left_rot: float
    right_rot: float
    buttons: tuple = (False,) * NUM_BUTTONS
    mode: bool = False

    def __post_init__(self) -> None:
        for name in ("squeeze", "left_rot", "right_rot"):
            p = getattr(self, name)
            if not (0.0 <= p <= 1.0):
                raise ValueError(f"{name} must be in [0, 1], got {p}")
        if len(self.buttons) != NUM_BUTTONS:
            raise ValueError(f"expected {NUM_BUTTONS} buttons, got {len(self.buttons)}")
        object.__setattr__(self, "buttons", tuple(bool(b) for b in self.buttons))


@dataclass(frozen=True)
class ContinuousSample:
    """One digitized reading: 7-bit axis values plus debounced button edges."""

    squeeze_val: int
    left_val: int
    right_val: int
    button_edges: tuple = ()  # ((index, pressed), ...) in ascending index order
    mode_edge: Optional[bool] = None


def apply_taper(p: float, kind: Taper) -> float:
    """Map a normalized pot position through its taper curve.

    The logarithmic taper is log10(1 + 9p), which hits 0 at p=0 and 1 at p=1
    and is strictly increasing in between.
    """
    if not (0.0 <= p <= 1.0):
        raise ValueError(f"position must be in [0, 1], got {p}")
    if kind is Taper.LINEAR:
        return p
    return math.log10(1.0 + 9.0 * p)


def to_voltage(p_tapered: float, axis: AxisCalibration, supply: float = 5.0) -> float:
    """Op-amp range scaling: clamp(gain * supply * p + offset) to [0, supply]."""
    if not math.isfinite(p_tapered):
        raise ValueError(f"input must be finite, got {p_tapered}")
    v = axis.gain * supply * p_tapered + axis.offset
    return min(max(v, 0.0), supply)


def adc_quantize(v: float, config: SensorConfig) -> int:
    """Digitize a voltage to an ADC code in [0, 2^adc_bits - 1]."""
    if not (0.0 <= v <= config.supply):
        raise ValueError(f"voltage {v} outside [0, {config.supply}]")
    code = math.floor(v / config.supply * config.full_code)
    return min(max(code, 0), config.full_code)


def to_midi_value(code: int, config: SensorConfig) -> int:
    """Truncate an ADC code to the retained most-significant bits."""
    if not (0 <= code <= config.full_code):
        raise ValueError(f"code {code} outside [0, {config.full_code}]")
    return code >> (config.adc_bits - config.retained_bits)


def quantize_axis(p: float, axis: AxisCalibration, config: SensorConfig) -> int:
    """Full per-axis chain: taper -> voltage -> ADC -> 7-bit value."""
    tapered = apply_taper(p, axis.taper)
    v = to_voltage(tapered, axis, config.supply)
    return to_midi_value(adc_quantize(v, config), config)


@dataclass
class _Contact:
    # Debounce bookkeeping for one switch.
    reported: bool = False
    candidate: bool = False
    since_ms: float = field(default=-math.inf)


class Sampler:
    """Stateful sampler for a gesture stream.

    Axis values are recomputed on every call; button and mode edges are
    reported only once the new contact level has been stable for at least
    ``debounce_ms`` and differs from the last reported level. Single-owner:
    not safe for concurrent use.
    """

    def __init__(self, config: SensorConfig | None = None):
        self.config = config or SensorConfig()
        self._buttons = [_Contact() for _ in range(NUM_BUTTONS)]
        self._mode = _Contact()
        self._last_t: float = -math.inf

    def _edge(self, contact: _Contact, raw: bool, t_ms: float) -> Optional[bool]:
        if raw != contact.candidate:
            contact.candidate = raw
            contact.since_ms = t_ms
        if (
            contact.candidate != contact.reported
            and t_ms - contact.since_ms >= self.config.debounce_ms
        ):
            contact.reported = contact.candidate
            return contact.reported
        return None

    def sample(self, gesture: GestureState, t_ms: float) -> ContinuousSample:
        if t_ms < self._last_t:
            raise ValueError(f"sample time went backwards: {t_ms} < {self._last_t}")
        self._last_t = t_ms

        cfg = self.config
        edges = []
        for i, contact in enumerate(self._buttons):
            edge = self._edge(contact, gesture.buttons[i], t_ms)
            if edge is not None:
                edges.append((i, edge))

        return ContinuousSample(
            squeeze_val=quantize_axis(gesture.squeeze, cfg.squeeze, cfg),
            left_val=quantize_axis(gesture.left_rot, cfg.left, cfg),
            right_val=quantize_axis(gesture.right_rot, cfg.right, cfg),
            button_edges=tuple(edges),
            mode_edge=self._edge(self._mode, gesture.mode, t_ms),
        )
