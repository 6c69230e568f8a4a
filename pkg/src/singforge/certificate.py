"""Outcome records for numerical checks.

A certificate is a grid computation: the worst margin seen on the grid
minus a Lipschitz slack that covers the gaps between grid points.  These are
careful numerics, not proofs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

PASS = "PASS"
FAIL = "FAIL"
INCONCLUSIVE = "INCONCLUSIVE"


@dataclass
class Certificate:
    check: str
    status: str
    margin: float = 0.0
    slack: float = 0.0
    grid: int = 0
    witnesses: list = field(default_factory=list)
    tolerances: dict = field(default_factory=dict)
    parts: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.status not in (PASS, FAIL, INCONCLUSIVE):
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {
            "check": self.check,
            "pass": self.passed,
            "status": self.status,
            "margin": float(self.margin),
            "slack": float(self.slack),
            "grid": int(self.grid),
            "witnesses": [_plain(w) for w in self.witnesses],
            "tolerances": {k: _plain(v) for k, v in self.tolerances.items()},
            "parts": [p.to_json() for p in self.parts],
            "details": {k: _plain(v) for k, v in self.details.items()},
        }

    def __repr__(self):
        return (f"Certificate({self.check!r}, {self.status}, margin={self.margin:.6g}, "
                f"slack={self.slack:.3g}, grid={self.grid})")


def _plain(x):
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if hasattr(x, "item"):
        return _plain(x.item())
    return x


def combine(check: str, parts: list, **kw) -> Certificate:
    """Aggregate sub-certificates: worst status wins, margins combine by minimum."""
    if not parts:
        return Certificate(check, PASS, margin=float("inf"), **kw)
    statuses = {p.status for p in parts}
    if FAIL in statuses:
        status = FAIL
    elif INCONCLUSIVE in statuses:
        status = INCONCLUSIVE
    else:
        status = PASS
    return Certificate(
        check,
        status,
        margin=min(p.margin for p in parts),
        slack=max(p.slack for p in parts),
        grid=max(p.grid for p in parts),
        witnesses=[w for p in parts for w in p.witnesses],
        parts=list(parts),
        **kw,
    )
