"""Virtual squeeze-box MIDI controller.

Faithful software model of the instrument's full signal path: three
continuous axes (bellows squeeze plus two hand rotations) and eleven buttons
pass through a pot/op-amp/ADC front end, a change-only MIDI encoder and a
rate-limited serial link; the inverse path rebuilds the performer's state
from raw MIDI bytes. A CLI replays recorded traces; a live bridge serves a
browser control panel.
"""

from .config import ConfigError, RunConfig, load_config, parse_config
from .engine import (
    DecodeResult,
    EncodePipeline,
    EncodeResult,
    format_encode_log,
    format_timeline,
    parse_encode_log,
    run_decode,
    run_encode,
)
from .link import Emission, LinkModel, LinkStats, TxQueue
from .protocol import (
    AXIS_ASSIGNMENT,
    MODE_ASSIGNMENT,
    Axis,
    ControlChange,
    Encoder,
    MidiEvent,
    NoteOn,
    button_assignment,
    describe,
)
from .reconstruct import ControllerState, Reconstructor, invert_axis
from .sensors import (
    AxisCalibration,
    ContinuousSample,
    GestureState,
    Sampler,
    SensorConfig,
    Taper,
    adc_quantize,
    apply_taper,
    quantize_axis,
    to_midi_value,
    to_voltage,
)
from .traces import TraceError, TraceRecord, load_trace, read_trace, save_trace
from .wire import StreamParser, serialize

__version__ = "0.1.0"

__all__ = [
    "AXIS_ASSIGNMENT",
    "Axis",
    "AxisCalibration",
    "ConfigError",
    "ContinuousSample",
    "ControlChange",
    "ControllerState",
    "DecodeResult",
    "Emission",
    "EncodePipeline",
    "EncodeResult",
    "Encoder",
    "GestureState",
    "LinkModel",
    "LinkStats",
    "MODE_ASSIGNMENT",
    "MidiEvent",
    "NoteOn",
    "Reconstructor",
    "RunConfig",
    "Sampler",
    "SensorConfig",
    "StreamParser",
    "Taper",
    "TraceError",
    "TraceRecord",
    "TxQueue",
    "adc_quantize",
    "apply_taper",
    "button_assignment",
    "describe",
    "format_encode_log",
    "format_timeline",
    "invert_axis",
    "load_config",
    "load_trace",
    "parse_config",
    "parse_encode_log",
    "quantize_axis",
    "read_trace",
    "run_decode",
    "run_encode",
    "save_trace",
    "serialize",
    "to_midi_value",
    "to_voltage",
]
