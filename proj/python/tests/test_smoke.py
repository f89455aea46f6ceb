import os
from pathlib import Path

import pytest

import eventify

DATA = Path(os.environ.get("EVENTIFY_SOURCE_DIR", Path(__file__).resolve().parents[2])) / "data" / "examples"


def load(name):
    return (DATA / name).read_text()


@pytest.fixture
def wall():
    return eventify.Device.from_json(load("wall.json"))


def test_device_round_trip(wall):
    again = eventify.Device.from_json(wall.to_json())
    assert again == wall
    assert again.to_json() == wall.to_json()
    assert len(wall) == len(wall.states)


def test_built_device_traces_words():
    device = eventify.Device(
        outputs={"low": {"cold"}, "high": {"hot"}},
        initial={"low"},
        transitions=[("low", "high", {"up"}), ("high", "low", {"down"})],
    )
    assert device.outputs_of(["up"]) == {"hot"}
    assert device.outputs_of(["up", "down"]) == {"cold"}
    assert not device.accepts(["down"])
    assert device.trace(["up"]) == {"high"}
    assert device.is_deterministic()
    assert device.language(2) == [[], ["up"], ["up", "down"]]


def test_delta_result_is_deterministic(wall):
    variator = eventify.Variator.from_json(load("flip.variator.json"))
    assert variator.is_functional()
    result = eventify.delta_transform(wall, variator)
    assert result.ok
    assert result.device.is_deterministic()
    verdict = eventify.check_output_simulation(
        result.device, wall, "delta:" + str(DATA / "flip.variator.json")
    )
    assert verdict.passed
    assert verdict.status == "holds"


def test_shrink_reports_conflict():
    small = eventify.Device.from_json(load("small.json"))
    result = eventify.shrink_transform(small, {"n"})
    assert not result
    assert result.device is None
    assert result.reason == "output-conflict"
    assert result.witness == ["a"]
    outputs = list(result.conflict.values())
    assert set.intersection(*outputs) == set()


def test_check_os_witness():
    candidate = eventify.Device.from_json(load("tiny_candidate.json"))
    reference = eventify.Device.from_json(load("tiny.json"))
    failing = eventify.check_output_simulation(candidate, reference, "shrink:n")
    assert not failing
    assert failing.source == ["a", "n", "b"]
    assert failing.image == ["a", "b"]
    assert failing.reason == "crash"
    assert eventify.check_output_simulation(candidate, reference, "pump:n").passed


def test_monoid_pipeline():
    compass = eventify.Device.from_json(load("compass.json"))
    rotations = eventify.Monoid.from_json(load("rotations.monoid.json"))
    assert rotations.identity == "r0"
    result = eventify.eventify(compass, rotations)
    assert result.ok
    assert all(len(result.device.output(s)) == 1 for s in result.device.states)


def test_bad_documents_raise():
    with pytest.raises(eventify.ParseError, match="output_map must be total"):
        eventify.Device.from_json(
            '{"schema": "eventify.device/1", "states": ["a"], "initial": ["a"],'
            ' "observations": [], "outputs": {}, "transitions": []}'
        )
    with pytest.raises(ValueError):
        eventify.Device.from_json("{")


def test_three_coloring():
    triangle = [("a", "b"), ("b", "c"), ("c", "a")]
    k4 = [(x, y) for x in "abcd" for y in "abcd" if x < y]
    assert eventify.is_3colorable(triangle)
    assert not eventify.is_3colorable(k4)
    assert eventify.minimize_variator(eventify.reduce_3coloring(triangle), 3) is not None
    assert eventify.minimize_variator(eventify.reduce_3coloring(k4), 3) is None
