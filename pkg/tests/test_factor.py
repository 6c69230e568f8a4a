"""Integer factorization checked against sympy as an independent oracle."""

import random

import pytest
import sympy

from singforge import factor as zf

X = sympy.Symbol("t")


def to_sympy(f):
    return sympy.Poly(list(reversed(f)), X)


def sympy_factor(f):
    c, parts = to_sympy(f).factor_list()
    out = []
    for g, m in parts:
        coeffs = [int(a) for a in reversed(g.all_coeffs())]
        if coeffs[-1] < 0:
            coeffs = [-a for a in coeffs]
            c = -c if m % 2 else c
        out.append((tuple(coeffs), m))
    return int(c), sorted(out)


def ours(f, prime=None):
    c, parts = zf.factor(f, prime=prime)
    return c, sorted((tuple(g), m) for g, m in parts)


@pytest.mark.parametrize(
    "f",
    [
        [1, -1, 1],  # cyclotomic 6
        [1, 0, -1, 0, 1],  # cyclotomic 12
        [-1, 0, 0, 0, 1],
        [1, -4, 8, -9, 8, -4, 1],
        [1, 0, -4, 0, 8, 0, -9, 0, 8, 0, -4, 0, 1],
        [2, 4, 2],
        [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -1],
    ],
)
def test_known_polynomials(f):
    assert ours(f) == sympy_factor(f)


def test_swinnerton_dyer_like_recombination():
    # (t^4 - 10 t^2 + 1) splits into quadratics modulo every prime
    f = [1, 0, -10, 0, 1]
    c, parts = zf.factor(f)
    assert parts == [([1, 0, -10, 0, 1], 1)]


def test_random_products_agree_with_sympy():
    rng = random.Random(7)
    for _ in range(40):
        f = [1]
        for _ in range(rng.randint(1, 3)):
            g = [rng.randint(-3, 3) for _ in range(rng.randint(1, 4))] + [rng.choice([-2, -1, 1, 2])]
            f = zf.mul(f, g)
        if zf.degree(f) < 1:
            continue
        assert ours(f) == sympy_factor(f)


def test_two_primes_agree():
    f = [1, 0, -4, 0, 8, 0, -9, 0, 8, 0, -4, 0, 1]
    assert ours(f, prime=5) == ours(f, prime=13)


def test_squarefree_decomposition():
    f = zf.mul(zf.mul([1, 1], [1, 1]), [1, 0, 1])
    parts = zf.squarefree_decomposition(f)
    assert ([1, 0, 1], 1) in parts and ([1, 1], 2) in parts


def test_mignotte_bound_dominates_factor_coefficients():
    f = [1, -4, 8, -9, 8, -4, 1]
    bound = zf.mignotte_bound(f)
    for g, _ in zf.factor(f)[1]:
        assert max(abs(a) for a in g) <= bound


def test_reflect_and_exact_div():
    assert zf.reflect([1, 2, 3]) == [1, -2, 3]
    assert zf.exact_div(zf.mul([1, 1], [2, -1, 5]), [1, 1]) == [2, -1, 5]
    assert zf.exact_div([1, 0, 1], [1, 1]) is None
