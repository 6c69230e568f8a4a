import numpy as np
import pytest

from singforge.braid import BraidWord
from singforge.certificate import FAIL, PASS
from singforge.looppoly import LoopPoly
from singforge.mixedpoly import MixedPoly, face_function, g_polynomial, newton
from singforge.pfibered import (
    PFiberData,
    certify,
    coefficient_speed,
    critical_values,
    minimal_coefficient_speed,
    minimal_power,
    proposition_T,
    realize,
    verify_compatible,
)
from singforge.trigpoly import TrigPoly

HOPF_LOOP = LoopPoly([TrigPoly({2: -1}), 0, 1])


def compatible_pair(a1=None):
    a1 = TrigPoly({4: -1}) if a1 is None else a1
    return [
        PFiberData(HOPF_LOOP, 0, a1),
        PFiberData(LoopPoly([TrigPoly({4: -1}), 1]), 2),
    ]


@pytest.mark.parametrize("s, m", [(1, 1), (2, 1), (3, 2)])
def test_critical_values_closed_form(s, m):
    data = PFiberData(LoopPoly([TrigPoly({2 * m: -1}), 1]), s)
    for t in np.linspace(0, 2 * np.pi, 7):
        vals = critical_values(data, t)
        expected = -(s ** s / (s + 1) ** (s + 1)) * np.exp(2j * m * (s + 1) * t)
        assert np.abs(vals - expected).min() < 1e-9


def test_hopf_is_pfibered():
    cert = certify(PFiberData(HOPF_LOOP))
    assert cert.status == PASS
    assert cert.margin == pytest.approx(2.0, rel=1e-6)
    names = [p.check for p in cert.parts]
    assert "simple_roots" in names and "pfibered_arg" in names


def test_opposite_coefficient_cancels_speed():
    cert = certify(PFiberData(HOPF_LOOP, 0, TrigPoly({-2: 1})))
    assert cert.status == FAIL


def test_constant_loop_is_not_pfibered():
    cert = certify(PFiberData(LoopPoly([-1, 0, 1])))
    assert cert.status == FAIL


def test_coefficient_speed():
    ts = np.linspace(0, 2 * np.pi, 16, endpoint=False)
    assert np.allclose(coefficient_speed(TrigPoly({3: 2j}), ts), 3)
    a = TrigPoly({0: 2, 1: 1})
    h = 1e-6
    t = 0.4
    fd = (np.angle(a(t + h) / a(t - h))) / (2 * h)
    assert coefficient_speed(a, np.array([t]))[0] == pytest.approx(fd, rel=1e-6)


def test_multiplicities_change_the_speed():
    g = LoopPoly([TrigPoly({2: -1}), 0, 1])
    equal = certify(PFiberData(g, 0, multiplicities=(1, 1)))
    assert equal.status == PASS and equal.margin == pytest.approx(2.0, rel=1e-6)
    unequal = certify(PFiberData(g, 0, multiplicities=(2, 1)))
    assert unequal.status == PASS and unequal.margin == pytest.approx(3.0, rel=1e-3)


def test_minimal_coefficient_speed():
    n, cert = minimal_coefficient_speed(HOPF_LOOP, 0)
    assert n == 0 and cert.passed
    n, _ = minimal_coefficient_speed(LoopPoly.from_roots_const([1, 2]), 0)
    assert n == 1


def test_minimal_power_bound():
    res = minimal_power(HOPF_LOOP, 0, TrigPoly({-5: 1}))
    assert res.q == 3
    assert res.observed == 1
    assert set(res.certificates) >= {1, 2, 3, 4}
    assert minimal_power(HOPF_LOOP, 0, TrigPoly({-4: 1})).q == 2


def test_verify_compatible_pair():
    rep = verify_compatible(compatible_pair())
    assert rep.ok
    margins = sorted(c.margin for c in rep.certificates)
    assert margins == pytest.approx([6.0, 12.0], rel=1e-6)


def test_verify_compatible_ladder_failure():
    rep = verify_compatible(compatible_pair(TrigPoly({0: 1})))
    assert not rep.ok
    assert "FAIL a_{i-1} ≠ b_i a_i at i = 2 (difference 1)" in rep.lines


def test_realize_pair():
    res = realize(compatible_pair())
    f = res.poly
    assert f.is_semiholomorphic
    nd = newton(f)
    assert nd.n_faces == 2
    for P, G in zip(res.weights, res.loops):
        assert g_polynomial(face_function(f, P), P).max_coeff_diff(G) < 1e-10
    assert res.certificate.status == PASS
    expected = MixedPoly({(0, 0, 10, 4): 1, (2, 0, 4, 0): -1, (3, 0, 0, 0): 1})
    assert f.allclose(expected, 1e-12)


def test_data_json_round_trip():
    d = compatible_pair()[1]
    back = PFiberData.from_json(d.to_json())
    assert back.o_mult == 2 and back.braid_loop.allclose(d.braid_loop, 0)


def test_proposition_T_sigma1():
    res = proposition_T(BraidWord.parse("s=2: s1"))
    assert res.M == 0 and res.dominance and res.structure_ok
    for m in (1, 2, 3):
        assert res.certificates[m].status == PASS
        assert res.certificates[m].margin == pytest.approx(2 * m + 2, rel=0.05)
    assert res.realization.certificate.status == PASS
