"""Hamilton cycles in bicirculant graphs."""

import json

from ._core import (
    BicircError,
    bicirculant,
    edges,
    find_hamilton_cycle,
    normalize_spec,
    usable_form,
    verify_cycle,
)
from . import _core

__all__ = [
    "BicircError",
    "bicirculant",
    "certify",
    "edges",
    "find_hamilton_cycle",
    "hamilton_cycle_grw",
    "normalize_spec",
    "replay",
    "scan",
    "usable_form",
    "verify_cycle",
]


def hamilton_cycle_grw(m, a, b, c, budget=None):
    """Certificate dict for R(m;a,b,c)."""
    args = (m, a, b, c) if budget is None else (m, a, b, c, budget)
    return json.loads(_core.hamilton_cycle_grw(*args))


def replay(certificate):
    """Rebuild the cycle of a certificate dict from its route and parameters."""
    return _core.replay(json.dumps(certificate))


def certify(spec, budget=None):
    """Hamiltonicity report dict for any spec text."""
    return json.loads(_core.certify(spec) if budget is None else _core.certify(spec, budget))


def scan(max_m, degree=None, s=None, jobs=1, force=False):
    """Reports for every connected bicirculant up to max_m, in canonical order."""
    return [json.loads(r) for r in _core.scan(max_m, degree, s, jobs, force=force)]
