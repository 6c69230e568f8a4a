"""Independent reference implementations used by the property and acceptance tests."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from singforge.braid import BraidWord
from singforge.looppoly import LoopPoly
from singforge.trigpoly import TrigPoly


def hull_vertices(points) -> set:
    """Vertices of ``conv(points) + R_+^2`` by scanning weights between pairwise critical slopes.

    A point is a vertex exactly when it is the unique minimizer of
    ``r x + y`` for every ``r`` in some open interval of positive ratios, so it
    suffices to test one ratio inside each interval cut out by the pairs.
    """
    pts = sorted(set(map(tuple, points)))
    crit = set()
    for i, (x1, y1) in enumerate(pts):
        for x2, y2 in pts[i + 1:]:
            dx, dy = x2 - x1, y2 - y1
            if dx * dy < 0:
                crit.add(Fraction(-dy, dx))
    crit = sorted(crit)
    if not crit:
        probes = [Fraction(1)]
    else:
        probes = [crit[0] / 2] + [(a + b) / 2 for a, b in zip(crit, crit[1:])] + [crit[-1] * 2]
    out = set()
    for r in probes:
        vals = [r * x + y for x, y in pts]
        low = min(vals)
        winners = [p for p, v in zip(pts, vals) if v == low]
        if len(winners) == 1:
            out.add(winners[0])
    return out


def random_word(rng, max_strands=6, max_len=20) -> BraidWord:
    s = int(rng.integers(2, max_strands + 1))
    n = int(rng.integers(1, max_len + 1))
    gens = tuple((int(rng.integers(1, s)), int(rng.choice([-1, 1]))) for _ in range(n))
    return BraidWord(s, gens)


def random_admissible_loop(rng, k=None, max_degree=4, max_k=4):
    """A monic loop together with a weight ``k`` able to carry all of its frequencies."""
    s = int(rng.integers(1, max_degree + 1))
    k = int(rng.integers(1, max_k + 1)) if k is None else k
    coeffs = []
    for j in range(s):
        span = k * (s - j)
        allowed = np.arange(-span, span + 1, 2)
        picks = rng.choice(allowed, size=min(3, allowed.size), replace=False)
        coeffs.append(TrigPoly({int(l): complex(*rng.normal(size=2)) for l in picks}))
    return LoopPoly(coeffs + [TrigPoly({0: 1})]), k
