"""Runtime-configurable resource bounds."""

from __future__ import annotations

import os

from .errors import InputError

DEFAULT_MAX_ORDER = 10080
DEFAULT_NODE_BUDGET = 10_000_000

_MAX_ORDER_ENV = "DELTA_MAX_ORDER"


def max_order() -> int:
    """Group-size bound; the DELTA_MAX_ORDER env var overrides the default."""
    raw = os.environ.get(_MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise InputError(f"{_MAX_ORDER_ENV} must be an integer, got {raw!r}")
    if value < 1:
        raise InputError(f"{_MAX_ORDER_ENV} must be positive, got {value}")
    return value
