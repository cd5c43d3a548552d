"""Exact computations in the three-point sl(2) current algebra and its free-field realization."""

import json as _json

from ._core import ConfigError, ParseError, apply, bracket, reduce, ring_mul, roundtrip_s, to_s
from ._core import verify as _verify


def verify(config=None):
    """Runs the verification suites for a config dict and returns the report as a dict."""
    return _json.loads(_verify(_json.dumps(config or {})))


__all__ = ["ConfigError", "ParseError", "apply", "bracket", "reduce", "ring_mul", "roundtrip_s", "to_s", "verify"]
