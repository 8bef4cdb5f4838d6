"""Cops-and-robber games on hypergraphs, backed by the C++ core."""

import json as _json

from _hypercop import *  # noqa: F401,F403
from _hypercop import play_json as _play_json
from _hypercop import run_suite_json as _run_suite_json


def play(h, **kwargs):
    """Play a match and return the trace as a dict."""
    return _json.loads(_play_json(h, **kwargs))


def run_suite(suite="ALL", budget_seconds=0.0, seed=0):
    """Run a verification suite and return the report as a dict."""
    return _json.loads(_run_suite_json(suite, budget_seconds, seed))
