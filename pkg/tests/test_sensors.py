import math

import pytest
from hypothesis import given, strategies as st

from squeezebox.sensors import (
    AxisCalibration,
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

from reference import ref_quantize


def test_log_taper_midpoint():
    assert apply_taper(0.5, Taper.LOGARITHMIC) == pytest.approx(math.log10(5.5))


def test_log_taper_endpoints():
    assert apply_taper(0.0, Taper.LOGARITHMIC) == 0.0
    assert apply_taper(1.0, Taper.LOGARITHMIC) == pytest.approx(1.0)


def test_linear_taper_is_identity():
    for p in (0.0, 0.25, 0.4999, 1.0):
        assert apply_taper(p, Taper.LINEAR) == p


def test_voltage_midscale():
    axis = AxisCalibration(taper=Taper.LINEAR)
    assert to_voltage(0.5, axis) == pytest.approx(2.5)


def test_voltage_clamps_to_rails():
    hot = AxisCalibration(taper=Taper.LINEAR, gain=2.0, offset=1.0)
    assert to_voltage(1.0, hot) == 5.0
    cold = AxisCalibration(taper=Taper.LINEAR, offset=-3.0)
    assert to_voltage(0.1, cold) == 0.0


def test_voltage_rejects_non_finite():
    axis = AxisCalibration(taper=Taper.LINEAR)
    with pytest.raises(ValueError):
        to_voltage(float("nan"), axis)


def test_adc_midscale_code():
    cfg = SensorConfig()
    assert adc_quantize(2.5, cfg) == 2047


def test_adc_full_scale_code():
    cfg = SensorConfig()
    assert adc_quantize(5.0, cfg) == 4095
    assert adc_quantize(0.0, cfg) == 0


def test_adc_rejects_out_of_range_voltage():
    cfg = SensorConfig()
    with pytest.raises(ValueError):
        adc_quantize(5.01, cfg)
    with pytest.raises(ValueError):
        adc_quantize(-0.01, cfg)


def test_truncation_keeps_top_seven_bits():
    cfg = SensorConfig()
    assert to_midi_value(4095, cfg) == 127
    assert to_midi_value(2047, cfg) == 63
    assert to_midi_value(31, cfg) == 0
    assert to_midi_value(32, cfg) == 1


def test_full_chain_log_midpoint():
    cfg = SensorConfig()
    assert quantize_axis(0.5, cfg.squeeze, cfg) == 94


def test_full_chain_linear_midpoint():
    cfg = SensorConfig()
    assert quantize_axis(0.5, cfg.left, cfg) == 63


def test_full_chain_endpoints():
    cfg = SensorConfig()
    for axis in (cfg.squeeze, cfg.left, cfg.right):
        assert quantize_axis(0.0, axis, cfg) == 0
        assert quantize_axis(1.0, axis, cfg) == 127


@given(st.floats(min_value=0.0, max_value=1.0), st.floats(min_value=0.0, max_value=1.0))
def test_full_chain_monotone(a, b):
    cfg = SensorConfig()
    lo, hi = sorted((a, b))
    for axis in (cfg.squeeze, cfg.left):
        assert quantize_axis(lo, axis, cfg) <= quantize_axis(hi, axis, cfg)


@given(st.floats(min_value=0.0, max_value=1.0))
def test_full_chain_matches_reference(p):
    cfg = SensorConfig()
    assert quantize_axis(p, cfg.squeeze, cfg) == ref_quantize(p, "log")
    assert quantize_axis(p, cfg.left, cfg) == ref_quantize(p, "linear")


def test_gesture_state_validates_range():
    with pytest.raises(ValueError):
        GestureState(squeeze=1.2, left_rot=0.0, right_rot=0.0)
    with pytest.raises(ValueError):
        GestureState(squeeze=0.0, left_rot=-0.1, right_rot=0.0)


def test_gesture_state_requires_ten_buttons():
    with pytest.raises(ValueError):
        GestureState(squeeze=0.0, left_rot=0.0, right_rot=0.0, buttons=(True,) * 9)


def test_calibration_rejects_nonpositive_gain():
    with pytest.raises(ValueError):
        AxisCalibration(taper=Taper.LINEAR, gain=0.0)


def test_config_rejects_bad_retained_bits():
    with pytest.raises(ValueError):
        SensorConfig(retained_bits=13)


def _press(buttons):
    return GestureState(squeeze=0.0, left_rot=0.0, right_rot=0.0, buttons=buttons)


def test_debounce_ignores_short_glitch():
    sampler = Sampler(SensorConfig(debounce_ms=5.0))
    idle = (False,) * 10
    hit = (True,) + (False,) * 9
    sampler.sample(_press(idle), 0.0)
    s = sampler.sample(_press(hit), 1.0)
    assert s.button_edges == ()
    s = sampler.sample(_press(idle), 3.0)  # released before 5 ms elapsed
    assert s.button_edges == ()
    s = sampler.sample(_press(idle), 20.0)
    assert s.button_edges == ()


def test_debounce_reports_stable_press_once():
    sampler = Sampler(SensorConfig(debounce_ms=5.0))
    hit = (True,) + (False,) * 9
    sampler.sample(_press((False,) * 10), 0.0)
    assert sampler.sample(_press(hit), 1.0).button_edges == ()
    assert sampler.sample(_press(hit), 6.0).button_edges == ((0, True),)
    assert sampler.sample(_press(hit), 11.0).button_edges == ()


def test_debounce_zero_reports_immediately():
    sampler = Sampler(SensorConfig(debounce_ms=0.0))
    hit = (False,) * 9 + (True,)
    s = sampler.sample(_press(hit), 0.0)
    assert s.button_edges == ((9, True),)


def test_mode_edge_debounced_like_buttons():
    sampler = Sampler(SensorConfig(debounce_ms=5.0))
    on = GestureState(squeeze=0.0, left_rot=0.0, right_rot=0.0, mode=True)
    off = GestureState(squeeze=0.0, left_rot=0.0, right_rot=0.0, mode=False)
    sampler.sample(off, 0.0)
    assert sampler.sample(on, 1.0).mode_edge is None
    assert sampler.sample(on, 6.0).mode_edge is True
    assert sampler.sample(off, 7.0).mode_edge is None
    assert sampler.sample(off, 12.0).mode_edge is False


def test_sampler_rejects_time_reversal():
    sampler = Sampler(SensorConfig())
    g = GestureState(squeeze=0.0, left_rot=0.0, right_rot=0.0)
    sampler.sample(g, 10.0)
    with pytest.raises(ValueError):
        sampler.sample(g, 9.0)


def test_sampler_quantizes_every_axis():
    sampler = Sampler(SensorConfig())
    s = sampler.sample(GestureState(squeeze=0.5, left_rot=0.25, right_rot=0.75), 0.0)
    assert (s.squeeze_val, s.left_val, s.right_val) == (94, 31, 95)
