"""Run configuration: JSON mirroring the RunConfig/SensorConfig field names.

Absent fields take their defaults; unknown keys are rejected so typos fail
loudly instead of silently running with defaults.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .link import LinkModel
from .sensors import AxisCalibration, SensorConfig, Taper

OUTPUT_FORMATS = ("text", "jsonl")


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    sensor: SensorConfig = SensorConfig()
    emit_initial: bool = False
    baud: int = 31250
    output_format: str = "text"

    def __post_init__(self) -> None:
        if self.output_format not in OUTPUT_FORMATS:
            raise ConfigError(
                f"output_format must be one of {OUTPUT_FORMATS}, got {self.output_format!r}"
            )

    def link(self) -> LinkModel:
        return LinkModel(baud=self.baud)


def _reject_unknown(data: dict, allowed, where: str) -> None:
    unknown = set(data) - set(allowed)
    if unknown:
        raise ConfigError(f"unknown key(s) in {where}: {', '.join(sorted(unknown))}")


def _parse_axis(data: dict, where: str, default: AxisCalibration) -> AxisCalibration:
    if not isinstance(data, dict):
        raise ConfigError(f"{where} must be an object")
    _reject_unknown(data, ("taper", "gain", "offset"), where)
    taper = default.taper
    if "taper" in data:
        try:
            taper = Taper(data["taper"])
        except ValueError:
            raise ConfigError(
                f"{where}.taper must be 'linear' or 'logarithmic', got {data['taper']!r}"
            ) from None
    try:
        return AxisCalibration(
            taper=taper,
            gain=float(data.get("gain", default.gain)),
            offset=float(data.get("offset", default.offset)),
        )
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{where}: {exc}") from exc


_SENSOR_KEYS = ("supply", "adc_bits", "retained_bits", "debounce_ms", "squeeze", "left", "right")
_TOP_KEYS = ("sensor", "emit_initial", "baud", "output_format")


def parse_config(data: dict) -> RunConfig:
    if not isinstance(data, dict):
        raise ConfigError("config root must be an object")
    _reject_unknown(data, _TOP_KEYS, "config")

    defaults = SensorConfig()
    sensor = defaults
    if "sensor" in data:
        raw = data["sensor"]
        if not isinstance(raw, dict):
            raise ConfigError("sensor must be an object")
        _reject_unknown(raw, _SENSOR_KEYS, "sensor")
        try:
            sensor = SensorConfig(
                supply=float(raw.get("supply", defaults.supply)),
                adc_bits=int(raw.get("adc_bits", defaults.adc_bits)),
                retained_bits=int(raw.get("retained_bits", defaults.retained_bits)),
                debounce_ms=float(raw.get("debounce_ms", defaults.debounce_ms)),
                squeeze=_parse_axis(raw.get("squeeze", {}), "sensor.squeeze", defaults.squeeze),
                left=_parse_axis(raw.get("left", {}), "sensor.left", defaults.left),
                right=_parse_axis(raw.get("right", {}), "sensor.right", defaults.right),
            )
        except ConfigError:
            raise
        except (TypeError, ValueError) as exc:
            raise ConfigError(f"sensor: {exc}") from exc

    emit_initial = data.get("emit_initial", False)
    if not isinstance(emit_initial, bool):
        raise ConfigError("emit_initial must be a boolean")
    baud = data.get("baud", 31250)
    if not isinstance(baud, int) or baud <= 0:
        raise ConfigError("baud must be a positive integer")
    output_format = data.get("output_format", "text")
    if not isinstance(output_format, str):
        raise ConfigError("output_format must be a string")
    return RunConfig(
        sensor=sensor, emit_initial=emit_initial, baud=baud, output_format=output_format
    )


def load_config(path: Union[str, Path]) -> RunConfig:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ConfigError(f"invalid JSON in {path}: {exc}") from exc
    return parse_config(data)
