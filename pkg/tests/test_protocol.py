import pytest

from squeezebox.protocol import (
    AXIS_ASSIGNMENT,
    MODE_ASSIGNMENT,
    PRESS_VELOCITY,
    RELEASE_VELOCITY,
    Axis,
    ControlChange,
    Encoder,
    NoteOn,
    button_assignment,
    describe,
)
from squeezebox.sensors import ContinuousSample


def test_axis_assignments_fixed():
    assert AXIS_ASSIGNMENT[Axis.SQUEEZE] == (1, 16)
    assert AXIS_ASSIGNMENT[Axis.LEFT] == (2, 17)
    assert AXIS_ASSIGNMENT[Axis.RIGHT] == (3, 18)


def test_button_assignments_fixed():
    for i in range(10):
        assert button_assignment(i) == (4 + i, 60 + i)
    assert MODE_ASSIGNMENT == (14, 70)


def test_button_assignment_rejects_out_of_range():
    with pytest.raises(ValueError):
        button_assignment(10)
    with pytest.raises(ValueError):
        button_assignment(-1)


def test_event_field_validation():
    with pytest.raises(ValueError):
        ControlChange(channel=0, controller=16, value=0)
    with pytest.raises(ValueError):
        ControlChange(channel=1, controller=128, value=0)
    with pytest.raises(ValueError):
        NoteOn(channel=1, note=60, velocity=200)


def test_describe_formats():
    assert describe(NoteOn(4, 60, 127)) == "NoteOn ch=4 note=60 vel=127"
    assert describe(ControlChange(1, 16, 94)) == "ControlChange ch=1 cc=16 val=94"


def test_axis_first_value_is_silent_baseline():
    enc = Encoder()
    assert enc.encode_axis(Axis.SQUEEZE, 64) is None
    assert enc.last_sent(Axis.SQUEEZE) == 64


def test_axis_emits_only_on_change():
    enc = Encoder()
    enc.encode_axis(Axis.SQUEEZE, 64)
    assert enc.encode_axis(Axis.SQUEEZE, 64) is None
    assert enc.encode_axis(Axis.SQUEEZE, 65) == ControlChange(1, 16, 65)
    assert enc.encode_axis(Axis.SQUEEZE, 65) is None


def test_emit_initial_sends_first_snapshot():
    enc = Encoder(emit_initial=True)
    assert enc.encode_axis(Axis.LEFT, 31) == ControlChange(2, 17, 31)
    assert enc.encode_axis(Axis.LEFT, 31) is None


def test_button_press_release_velocities():
    enc = Encoder()
    assert enc.encode_button(3, True) == NoteOn(7, 63, PRESS_VELOCITY)
    assert enc.encode_button(3, False) == NoteOn(7, 63, RELEASE_VELOCITY)


def test_held_button_sends_nothing():
    enc = Encoder()
    enc.encode_button(0, True)
    assert enc.encode_button(0, True) is None
    assert enc.is_held(0)


def test_release_without_press_sends_nothing():
    enc = Encoder()
    assert enc.encode_button(5, False) is None


def test_mode_uses_reserved_assignment():
    enc = Encoder()
    assert enc.encode_mode(True) == NoteOn(14, 70, 127)
    assert enc.encode_mode(True) is None
    assert enc.encode_mode(False) == NoteOn(14, 70, 0)


def test_sample_order_buttons_mode_then_axes():
    enc = Encoder()
    enc.encode_sample(ContinuousSample(squeeze_val=0, left_val=0, right_val=0))
    sample = ContinuousSample(
        squeeze_val=10,
        left_val=20,
        right_val=30,
        button_edges=((4, True), (1, True)),
        mode_edge=True,
    )
    events = enc.encode_sample(sample)
    assert events == [
        NoteOn(5, 61, 127),
        NoteOn(8, 64, 127),
        NoteOn(14, 70, 127),
        ControlChange(1, 16, 10),
        ControlChange(2, 17, 20),
        ControlChange(3, 18, 30),
    ]
