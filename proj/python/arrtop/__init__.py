"""Exact topology of complex line arrangements."""

import json

from ._arrtop import (
    SCHEMA_VERSION,
    Arrangement,
    ArrtopError,
    BudgetError,
    ConsistencyError,
    ValidationError,
    falk_demo_json,
    fixture_names,
)

__all__ = [
    "SCHEMA_VERSION",
    "Arrangement",
    "ArrtopError",
    "BudgetError",
    "ConsistencyError",
    "ValidationError",
    "fixture_names",
    "report",
    "section",
    "falk_demo",
]


def report(arrangement):
    """Full report of an Arrangement as a dict."""
    return json.loads(arrangement.report_json())


def section(arrangement, name):
    """One report section ("lattice", "resonance", "multinets", "pi1", "milnor", "boundary")."""
    return json.loads(arrangement.section_json(name))


def falk_demo():
    """Side-by-side comparison of the two Falk arrangements as a dict."""
    return json.loads(falk_demo_json())
