import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import hull_vertices
from singforge.looppoly import LoopPoly
from singforge.mixedpoly import MixedPoly, WeightVector, from_loop, g_polynomial, newton, symmetry_sign
from singforge.obstruction import GF2Poly, IntLaurentPoly, murasugi_check
from singforge.trigpoly import EVEN, TrigPoly, approximate

coeff = st.complex_numbers(max_magnitude=10, allow_nan=False, allow_infinity=False)
# coefficients far above the relative drop tolerance, so "exact" is meaningful
solid = st.complex_numbers(min_magnitude=1e-3, max_magnitude=10, allow_nan=False, allow_infinity=False)
trig = st.dictionaries(st.integers(-12, 12), coeff, max_size=6).map(TrigPoly)
lattice = st.lists(st.tuples(st.integers(0, 12), st.integers(0, 12)), min_size=1, max_size=12)


@given(trig, trig, st.floats(0, 2 * np.pi))
def test_mul_is_pointwise(p, q, t):
    bound = 1e-12 * (1 + p.c1_norm()) * (1 + q.c1_norm())
    assert abs((p * q)(t) - p(t) * q(t)) <= bound


@given(trig)
def test_sup_bounded_by_coefficient_sum(p):
    ts = np.linspace(0, 2 * np.pi, 256, endpoint=False)
    assert np.abs(p(ts)).max(initial=0) <= p.coeff_sum() * (1 + 1e-12) + 1e-300


@given(st.dictionaries(st.integers(-10, 10).map(lambda l: 2 * l), coeff, min_size=1, max_size=5))
def test_even_projection_is_identity(coeffs):
    p = TrigPoly(coeffs)
    ts = np.linspace(0, 2 * np.pi, 64, endpoint=False)
    q = approximate(ts, p(ts), parity=EVEN, max_freq=20, tol=1e-9)
    assert p.max_coeff_diff(q) <= 1e-12 * max(1.0, max(abs(c) for c in coeffs.values()))


@given(lattice)
def test_newton_matches_oracle(points):
    terms = {(mu, 0, nu, 0): 1.0 for mu, nu in points}
    nd = newton(MixedPoly(terms))
    assert set(nd.boundary_vertices) == hull_vertices(points)


@settings(max_examples=60)
@given(st.integers(1, 4), st.integers(1, 3), st.data())
def test_loop_round_trip(s, k, data):
    coeffs = []
    for j in range(s):
        span = k * (s - j)
        freqs = data.draw(st.lists(st.integers(-span, span).filter(lambda l, sp=span: (sp - l) % 2 == 0),
                                   max_size=3, unique=True))
        coeffs.append(TrigPoly({l: data.draw(solid) for l in freqs}))
    g = LoopPoly(coeffs + [TrigPoly({0: 1})])
    f = from_loop(g, k)
    assert g_polynomial(f, WeightVector(k, 1)).max_coeff_diff(g) == 0
    if k % 2 == 0:
        assert symmetry_sign(f, "tau_u") in (1, -1)


@given(st.integers(1, 1 << 12))
def test_gf2_square_roots(bits):
    p = GF2Poly(bits)
    sq = p * p
    assert sq.is_square() and sq.sqrt() == p


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=8).filter(lambda c: c[-1] != 0 and c[0] != 0),
       st.integers(-5, 5))
def test_murasugi_unit_invariance(coeffs, k):
    p = IntLaurentPoly(coeffs)
    base = murasugi_check(p).verdict
    assert murasugi_check(p.shift(k)).verdict == base
    assert murasugi_check(p.reciprocal()).verdict == base
