import cmath
import math

import numpy as np
import pytest

from singforge.trigpoly import (
    EVEN,
    MIXED,
    ODD,
    ZERO,
    ResidualTooLarge,
    TrigPoly,
    approximate,
    frequency_parity,
)


def grid(n):
    return np.linspace(0.0, 2 * np.pi, n, endpoint=False)


def test_eval_examples():
    assert TrigPoly({1: 1})(0.0) == 1
    assert abs(TrigPoly({2: 1})(np.pi / 2) - (-1)) < 1e-15
    p = TrigPoly({-1: 1j, 1: 1j})
    direct = 1j * cmath.exp(-1j * math.pi / 3) + 1j * cmath.exp(1j * math.pi / 3)
    assert abs(p(math.pi / 3) - direct) < 1e-15
    assert abs(p(math.pi / 3) - 1j) < 1e-15


def test_eval_is_periodic():
    p = TrigPoly({3: 0.5 - 2j, -7: 1.25})
    assert abs(p(0.0) - p(2 * np.pi)) < 1e-13


def test_derivative_examples():
    assert TrigPoly({2: 1}).derivative().coeffs == {2: 2j}
    assert TrigPoly({0: 5}).derivative().is_zero()
    assert TrigPoly({-3: 1 + 1j}).derivative().coeffs == {-3: 3 - 3j}


def test_ring_examples():
    assert (TrigPoly({1: 1}) * TrigPoly({-1: 1})).coeffs == {0: 1}
    assert (TrigPoly({1: 1}) * TrigPoly({1: 1})).coeffs == {2: 1}
    assert (TrigPoly({0: 1}) + TrigPoly({0: -1})).is_zero()


@pytest.mark.parametrize(
    "coeffs, expected",
    [({2: 1, -4: 3}, EVEN), ({1: 1, 3: -1j}, ODD), ({0: 1, 1: 1}, MIXED), ({}, ZERO)],
)
def test_frequency_parity(coeffs, expected):
    assert frequency_parity(TrigPoly(coeffs)) == expected


def test_approximate_even_exact():
    ts = grid(64)
    p = approximate(ts, np.exp(2j * ts), parity=EVEN, max_freq=8, tol=1e-12)
    assert p.allclose(TrigPoly({2: 1}), 1e-12)


def test_approximate_rejects_wrong_parity():
    ts = grid(64)
    with pytest.raises(ResidualTooLarge) as info:
        approximate(ts, np.exp(1j * ts), parity=EVEN, max_freq=8)
    assert info.value.residual > 0.9


def test_approximate_cosine_odd():
    ts = grid(64)
    p = approximate(ts, np.cos(ts), parity=ODD, max_freq=8)
    assert p.allclose(TrigPoly({1: 0.5, -1: 0.5}), 1e-14)


def test_approximate_needs_enough_samples():
    with pytest.raises(ValueError):
        approximate(grid(8), np.ones(8), max_freq=4)


def test_drop_tolerance_suppresses_noise():
    p = TrigPoly({0: 1.0, 3: 1e-16})
    assert frequency_parity(p) == EVEN


def test_json_round_trip():
    p = TrigPoly({-2: 1 - 0.5j, 5: 3.0})
    obj = p.to_json()
    assert [row[0] for row in obj["freqs"]] == [-2, 5]
    assert TrigPoly.from_json(obj).coeffs == p.coeffs


def test_projection_property(rng):
    for _ in range(20):
        freqs = rng.choice(np.arange(-10, 11, 2), size=4, replace=False)
        p = TrigPoly({int(l): complex(*rng.normal(size=2)) for l in freqs})
        ts = grid(128)
        q = approximate(ts, p(ts), parity=EVEN, max_freq=12)
        assert p.max_coeff_diff(q) < 1e-12


def test_multiplication_and_sup_bound(rng):
    for _ in range(20):
        p = TrigPoly({int(l): complex(*rng.normal(size=2)) for l in rng.integers(-6, 7, 4)})
        q = TrigPoly({int(l): complex(*rng.normal(size=2)) for l in rng.integers(-6, 7, 4)})
        ts = rng.uniform(0, 2 * np.pi, 1000)
        err = np.abs((p * q)(ts) - p(ts) * q(ts)).max()
        assert err < 1e-12 * (1 + p.c1_norm()) * (1 + q.c1_norm())
        assert np.abs(p(grid(512))).max() <= p.coeff_sum() + 1e-12


def test_derivative_matches_central_differences():
    p = TrigPoly({3: 1 + 2j, -2: 0.5, 1: -1j})
    t = 0.7
    errs = []
    for h in (1e-3, 1e-4):
        fd = (p(t + h) - p(t - h)) / (2 * h)
        errs.append(abs(p.derivative()(t) - fd))
    order = math.log10(errs[0] / errs[1])
    assert order >= 1.9
