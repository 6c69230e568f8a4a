import itertools
from fractions import Fraction

import numpy as np
import pytest

from singforge.looppoly import LoopPoly
from singforge.mixedpoly import (
    InadmissibleK,
    MixedPoly,
    VertexMismatch,
    WeightOrderViolation,
    WeightVector,
    apply_symmetry,
    boundary_vertices,
    eval_poly,
    face_function,
    from_loop,
    g_polynomial,
    glue,
    gradient,
    h_polynomial,
    is_nice,
    multiply_by_u,
    multiply_by_v,
    newton,
    symmetry_sign,
    vertex_function,
)
from singforge.trigpoly import TrigPoly


def M(*terms):
    """``M((a1, a2, b1, b2, c), ...)``."""
    return MixedPoly({t[:4]: t[4] for t in terms})


HOPF = M((2, 0, 0, 0, 1), (0, 0, 2, 0, -1))
THREE = M((3, 0, 0, 0, 1), (1, 0, 2, 0, 1), (0, 0, 5, 0, 1))
HOPF_LOOP = LoopPoly([TrigPoly({2: -1}), 0, 1])


def random_admissible_loop(rng, k=None):
    """A monic loop and a weight ``k`` that can carry every frequency of it."""
    s = int(rng.integers(1, 5))
    k = int(rng.integers(1, 5)) if k is None else k
    coeffs = []
    for j in range(s):
        span = k * (s - j)
        allowed = np.arange(-span, span + 1, 2)
        picks = rng.choice(allowed, size=min(2, allowed.size), replace=False)
        coeffs.append(TrigPoly({int(l): complex(*rng.normal(size=2)) for l in picks}))
    return LoopPoly(coeffs + [TrigPoly({0: 1})]), k


class TestNewton:
    def test_two_point_hull(self):
        nd = newton(HOPF)
        assert nd.boundary_vertices == [(0, 2), (2, 0)]
        assert len(nd.faces) == 1
        assert tuple(nd.faces[0].weight) == (1, 1) and nd.faces[0].degree == 2
        assert nd.u_convenient and nd.v_convenient

    def test_three_point_hull(self):
        nd = newton(THREE)
        assert nd.boundary_vertices == [(0, 5), (1, 2), (3, 0)]
        assert [tuple(F.weight) for F in nd.faces] == [(3, 1), (1, 1)]
        assert face_function(THREE, WeightVector(3, 1)).allclose(M((1, 0, 2, 0, 1), (0, 0, 5, 0, 1)))
        assert face_function(THREE, WeightVector(1, 1)).allclose(M((1, 0, 2, 0, 1), (3, 0, 0, 0, 1)))
        assert vertex_function(THREE, (1, 2)).allclose(M((1, 0, 2, 0, 1)))

    def test_single_vertex(self):
        nd = newton(M((1, 0, 1, 0, 1)))
        assert nd.boundary_vertices == [(1, 1)] and nd.n_faces == 0
        assert not nd.u_convenient

    def test_collinear_points_are_not_vertices(self):
        assert boundary_vertices([(0, 4), (1, 2), (2, 0)]) == [(0, 4), (2, 0)]

    def test_weight_order(self):
        assert WeightVector(3, 1) > WeightVector(1, 1)
        assert WeightVector(4, 2) == WeightVector(2, 1)
        assert WeightVector.from_ratio(Fraction(3, 2)) == WeightVector(3, 2)


class TestLoops:
    def test_from_loop_examples(self):
        assert from_loop(HOPF_LOOP, 1).allclose(HOPF)
        assert from_loop(HOPF_LOOP, 2).allclose(M((2, 0, 0, 0, 1), (0, 0, 3, 1, -1)))

    def test_inadmissible_k(self):
        g = LoopPoly([-1, 1])
        with pytest.raises(InadmissibleK) as info:
            from_loop(g, 1)
        assert info.value.smallest_even == 2
        assert from_loop(g).allclose(M((1, 0, 0, 0, 1), (0, 0, 1, 1, -1)))

    def test_g_polynomial_examples(self):
        assert g_polynomial(HOPF, WeightVector(1, 1)).allclose(HOPF_LOOP, 0)
        f = M((2, 0, 0, 0, 1), (0, 0, 3, 1, -1))
        assert g_polynomial(f, WeightVector(2, 1)).allclose(HOPF_LOOP, 0)
        f = M((1, 0, 0, 0, 1), (0, 0, 1, 1, -1))
        assert g_polynomial(f, WeightVector(2, 1)).allclose(LoopPoly([-1, 1]), 0)

    def test_h_polynomial_swaps_roles(self):
        h = h_polynomial(HOPF, WeightVector(1, 1))
        assert h.allclose(LoopPoly([TrigPoly({2: 1}), 0, -1]), 0)

    def test_round_trip_random(self, rng):
        for _ in range(20):
            g, k = random_admissible_loop(rng)
            f = from_loop(g, k)
            assert g_polynomial(f, WeightVector(k, 1)).max_coeff_diff(g) == 0


class TestGlue:
    HAT = M((1, 0, 2, 0, 1), (0, 0, 4, 0, -1))
    TILDE = M((1, 0, 2, 0, 1), (3, 0, 0, 0, -1))

    def test_two_faces(self):
        f = glue([self.HAT, self.TILDE])
        nd = newton(f)
        assert nd.n_faces == 2
        assert face_function(f, nd.faces[0].weight).allclose(self.HAT)
        assert face_function(f, nd.faces[1].weight).allclose(self.TILDE)

    def test_single_part(self):
        assert glue([HOPF]).allclose(HOPF)

    def test_mismatch(self):
        other = M((1, 0, 2, 0, 2), (3, 0, 0, 0, -1))
        with pytest.raises(VertexMismatch):
            glue([self.HAT, other])

    def test_order_violation(self):
        with pytest.raises(WeightOrderViolation):
            glue([self.TILDE, self.HAT])


class TestSymmetryAndEval:
    def test_multiply(self):
        assert multiply_by_u(HOPF).allclose(M((3, 0, 0, 0, 1), (1, 0, 2, 0, -1)))
        assert multiply_by_v(M((0, 0, 0, 0, 1))).allclose(M((0, 0, 1, 0, 1)))
        assert multiply_by_u(MixedPoly()).is_zero()

    def test_signs(self):
        assert symmetry_sign(HOPF, "tau_u") == 1
        assert symmetry_sign(M((2, 0, 0, 0, 1), (0, 0, 3, 1, -1)), "tau_u") == 1
        assert symmetry_sign(M((1, 0, 0, 0, 1), (0, 0, 1, 0, 1)), "tau_u") is None

    def test_odd_weights_give_tau_1_sign(self, rng):
        for _ in range(100):
            p1, p2 = 2 * rng.integers(0, 4, 2) + 1
            P = WeightVector(int(p1), int(p2))
            d = int(P.p1 * P.p2 * rng.integers(1, 3))
            terms = {}
            for mu, nu in itertools.product(range(d + 1), repeat=2):
                if P.alpha(mu, nu) == d:
                    a1 = int(rng.integers(0, mu + 1))
                    b1 = int(rng.integers(0, nu + 1))
                    terms[(a1, mu - a1, b1, nu - b1)] = complex(*rng.normal(size=2))
            if terms:
                assert symmetry_sign(MixedPoly(terms), "tau_1") in (1, -1)

    def test_apply_symmetry_matches_eval(self, rng):
        f = M((2, 0, 1, 0, 1), (0, 1, 0, 2, 1j), (1, 1, 1, 1, -2))
        g = apply_symmetry(f, "tau_u")
        for _ in range(100):
            u, v = rng.normal(size=2) + 1j * rng.normal(size=2)
            assert abs(eval_poly(g, u, v) - eval_poly(f, u, -v)) < 1e-12

    def test_eval_and_gradient(self):
        assert eval_poly(HOPF, 1, 1) == 0
        assert np.allclose(gradient(HOPF, 1, 1), (2, 0, -2, 0))
        assert abs(eval_poly(M((1, 0, 0, 1, 1)), 1j, 1j) - 1) < 1e-15


class TestNice:
    def test_single_face_is_nice(self):
        assert is_nice(HOPF).passed

    def test_single_term_vertex_is_nice(self):
        f = glue([TestGlue.HAT, TestGlue.TILDE])
        assert is_nice(f).passed

    def test_cosine_vertex_is_not_nice(self):
        f = M((0, 0, 4, 0, 1), (1, 0, 1, 0, 1), (0, 1, 0, 1, 1), (4, 0, 0, 0, 1))
        assert newton(f).interior_vertices() == [(1, 1)]
        cert = is_nice(f)
        assert not cert.passed
        assert cert.witnesses


def test_json_round_trip():
    obj = THREE.to_json()
    assert obj["terms"][0][:4] == [0, 0, 5, 0]
    assert MixedPoly.from_json(obj).allclose(THREE)
