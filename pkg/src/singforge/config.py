"""Numeric defaults shared by every module.

Values come from ``defaults.json`` next to this file.  The environment
variable ``SINGFORGE_GRID`` overrides every default grid size at once.
"""

from __future__ import annotations

import json
import os
from contextlib import contextmanager
from importlib import resources

_GRID_KEYS = ("braid_grid", "loop_grid", "track_grid", "pfiber_grid")


def load_defaults() -> dict:
    with resources.files(__package__).joinpath("defaults.json").open() as fh:
        values = json.load(fh)
    grid = os.environ.get("SINGFORGE_GRID")
    if grid:
        n = int(grid)
        if n < 8:
            raise ValueError(f"SINGFORGE_GRID must be at least 8, got {n}")
        for key in _GRID_KEYS:
            values[key] = n
    return values


DEFAULTS = load_defaults()


def get(key: str):
    return DEFAULTS[key]


@contextmanager
def override(**values):
    """Temporarily replace defaults, e.g. ``with override(loop_grid=8192): ...``."""
    unknown = set(values) - set(DEFAULTS)
    if unknown:
        raise KeyError(f"unknown settings: {sorted(unknown)}")
    saved = {k: DEFAULTS[k] for k in values}
    DEFAULTS.update(values)
    try:
        yield
    finally:
        DEFAULTS.update(saved)
