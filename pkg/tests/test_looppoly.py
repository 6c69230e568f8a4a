import numpy as np
import pytest

from singforge.braid import BraidWord, GeometricBraid, constant, from_word, same_invariants
from singforge.looppoly import (
    LoopPoly,
    MarginViolated,
    from_braid,
    parity_pattern,
    roots_at,
    simple_root_margin,
    substitute_power,
    track,
)
from singforge.trigpoly import EVEN, ODD, ZERO, TrigPoly, frequency_parity

TS = np.linspace(0.0, 2 * np.pi, 1025)


def loop(*coeffs):
    return LoopPoly([TrigPoly(c) if isinstance(c, dict) else c for c in coeffs])


HOPF = loop({2: -1}, 0, 1)


def test_from_braid_full_twist():
    B = GeometricBraid(np.array([np.exp(1j * TS), -np.exp(1j * TS)]))
    g = from_braid(B, "u_even")
    assert g.allclose(HOPF, 1e-12)
    assert g.coeffs[1].is_zero()
    assert g.is_monic


def test_from_braid_odd_three_strands():
    B = GeometricBraid(np.array([np.exp(1j * (TS + 2 * np.pi * j) / 3) for j in range(3)]))
    g = from_braid(B, "odd")
    assert g.allclose(loop({1: -1}, 0, 0, 1), 1e-12)


def test_from_braid_constant():
    assert from_braid(constant([1])).allclose(loop(-1, 1), 1e-14)


def test_roots_at_examples():
    assert np.allclose(sorted(roots_at(HOPF, 0.0), key=lambda z: z.real), [-1, 1])
    assert np.allclose(roots_at(loop(-1, 1), 1.234), [1])
    r = roots_at(loop({1: -1}, 0, 0, 1), np.pi)
    assert np.allclose(r ** 3, -1)


def test_track_examples():
    B = track(HOPF)
    assert B.closure == (0, 1)
    assert B.linking_matrix()[0, 1] == 1
    one = track(loop({1: -1}, 1))
    winding = np.unwrap(np.angle(one.samples[0]))
    assert round((winding[-1] - winding[0]) / (2 * np.pi)) == 1
    assert track(loop({1: -1}, 0, 1)).closure == (1, 0)


def test_track_rejects_double_root():
    with pytest.raises(MarginViolated):
        track(loop(0, 0, 1))


def test_simple_root_margin_examples():
    margin, cert = simple_root_margin(HOPF)
    assert cert.passed and 1.9 < margin <= 2.0
    d = 1e-3
    margin, cert = simple_root_margin(LoopPoly.from_roots_const([1, 1 - d]))
    assert cert.passed and margin == pytest.approx(d, rel=1e-6)
    margin, cert = simple_root_margin(loop(0, 0, 1))
    assert margin == 0 and not cert.passed


def test_substitute_power_examples():
    assert substitute_power(HOPF, 3).allclose(loop({6: -1}, 0, 1), 0)
    assert substitute_power(loop(-1, 1), 5).allclose(loop(-1, 1), 0)
    assert substitute_power(loop({1: -1}, 1), 2).allclose(loop({2: -1}, 1), 0)


def test_parity_pattern():
    assert parity_pattern(2, "u_even") == [EVEN] * 3
    assert parity_pattern(3, "odd") == [ODD, EVEN, ODD, EVEN]
    assert parity_pattern(4, "k2") == [EVEN, ZERO, ODD, ZERO, EVEN]


def test_round_trip_braid_loop(rng):
    for word in ["s=2: s1 s1", "s=3: s1 s2 s1 s2 s1 s2", "s=2: s1^-1 s1^-1", "s=3: s1 s2^-1 s1 s2^-1"]:
        w = BraidWord.parse(word)
        B = from_word(w * w)
        g = from_braid(B, "u_even")
        for c in g.coeffs:
            assert frequency_parity(c) in (EVEN, ZERO)
        T = track(g)
        assert same_invariants(T, B)


def test_vieta(rng):
    g = from_braid(from_word(BraidWord.parse("s=3: s1 s2 s1 s1 s2 s1")), "u_even")
    for t in rng.uniform(0, 2 * np.pi, 100):
        r = roots_at(g, t)
        assert abs(np.prod(r) - (-1) ** 3 * g.coeffs[0](t)) < 1e-9


def test_json_round_trip():
    g = loop({2: -1, -1: 0.5j}, 0, {0: 1})
    h = LoopPoly.from_json(g.to_json())
    assert h.allclose(g, 0)
    assert g.to_json()["degree"] == 2
