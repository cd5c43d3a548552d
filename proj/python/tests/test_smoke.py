from fractions import Fraction

import pytest

import threept


def test_ring_and_s_coordinate():
    assert threept.ring_mul("u", "u") == "t^2 + 4*t^1"
    assert threept.to_s("t^-3*u") == "(s^3 + s^2)/((s - 1)^5)"
    assert threept.roundtrip_s("3/2*t^-1*u - 2*t^3") == "-2*t^3 + 3/2*t^-1*u"


def test_reduce():
    assert threept.reduce("t^1*u", "t^-2*u") == (Fraction(-6), Fraction(0))
    assert threept.reduce("t^-2*u", "t") == (Fraction(0), Fraction(1, 2))
    assert threept.reduce("1", "t^-2*u") == (Fraction(0), Fraction(0))


def test_bracket():
    assert threept.bracket("h1[0]", "e1[0]") == "2*e[t^2] + 8*e[t^1]"
    assert threept.bracket("h[t^2]", "h[t^-2]") == "-4*w0"


def test_apply():
    assert threept.apply("a*", 2, "x_-2") == "-v0"
    assert threept.apply("b", 2, "y_-2") == "-4*v0"
    assert threept.apply("f", 1, "v0", r=1) == "-x_1*v0"
    assert threept.apply("h", 0, "v0", lambda_=Fraction(2, 3)) == "2/3*v0"
    assert threept.apply("w0", 0, "v1", kappa0=-2) == "2*v1"


def test_errors():
    with pytest.raises(ValueError):
        threept.bracket("g[t]", "e[t]")
    with pytest.raises(ValueError):
        threept.apply("a", 0, "v0", r=3)
    with pytest.raises(threept.ConfigError):
        threept.verify({"bogus": 1})


def test_verify_report():
    rep = threept.verify({"suites": ["ring", "pairs"], "windows": {"pairs": {"window": [-1, 1], "degree_max": 1}}})
    assert rep["summary"]["passed"] is True
    assert {r["suite"] for r in rep["records"]} == {"ring", "pairs"}
    failing = threept.verify({"suites": ["kahler"]})
    assert failing["summary"]["asserted_failures"] == 83
