import math

import pytest

from domain.errors import ConfigError
from fields import parse_angle, parse_concentration, parse_int, parse_sweep, parse_triple


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0.5", 0.5),
        ("pi/4", math.pi / 4),
        ("3*pi/8", 3 * math.pi / 8),
        ("PI / 2", math.pi / 2),
        ("π/3", math.pi / 3),
        ("1e-6", 1e-6),
        (".25", 0.25),
    ],
)
def test_parse_angle(text, expected):
    assert parse_angle(text) == pytest.approx(expected, rel=1e-15)


def test_parse_angle_passes_numbers_through():
    assert parse_angle(1.25) == 1.25


@pytest.mark.parametrize("text", ["", "2pi/3", "pi/", "*pi", "pi/0", "tau", "pi**2"])
def test_parse_angle_rejects_malformed(text):
    with pytest.raises(ConfigError) as exc:
        parse_angle(text, "--theta")
    assert exc.value.field == "--theta"


@pytest.mark.parametrize("text", ["inf", "INF", "∞", "noiseless", "infinity"])
def test_parse_concentration_infinite(text):
    assert parse_concentration(text).noiseless


def test_parse_concentration_values():
    assert parse_concentration("3").value == 3.0
    assert parse_concentration("0").is_uniform
    with pytest.raises(ConfigError):
        parse_concentration("-1", "--k-tilt")
    with pytest.raises(ConfigError):
        parse_concentration("lots")


def test_parse_triple():
    assert parse_triple("1,0,0") == (1.0, 0.0, 0.0)
    assert parse_triple("(0.1; 0.2; 0.3)") == (0.1, 0.2, 0.3)
    assert parse_triple("0 1 4") == (0.0, 1.0, 4.0)
    for bad in ("1,0", "a,b,c", "1,nan,0"):
        with pytest.raises(ConfigError):
            parse_triple(bad, "--b0")


def test_parse_int():
    assert parse_int("1_000_000", "--samples") == 1_000_000
    assert parse_int(5, "--steps", minimum=0) == 5
    with pytest.raises(ConfigError):
        parse_int("-1", "--steps", minimum=0)
    with pytest.raises(ConfigError):
        parse_int("2.5", "--seed")
    with pytest.raises(ConfigError):
        parse_int(True, "--seed")


def test_parse_sweep():
    sweep = parse_sweep("k_dephase=0.5,1,3,10")
    assert sweep.name == "k_dephase"
    assert sweep.values == (0.5, 1.0, 3.0, 10.0)
    sweep = parse_sweep("theta=pi/8,pi/4")
    assert sweep.values == pytest.approx((math.pi / 8, math.pi / 4))
    sweep = parse_sweep("k-tilt=1,inf")
    assert sweep.name == "k_tilt"
    assert sweep.values[0] == 1.0 and math.isinf(sweep.values[1])


@pytest.mark.parametrize("text", ["k_dephase", "gamma=1,2", "theta=", "k_tilt=-1"])
def test_parse_sweep_rejects_malformed(text):
    with pytest.raises(ConfigError):
        parse_sweep(text)
