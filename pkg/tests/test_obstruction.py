import itertools
import random
import time

import pytest

from singforge import factor as zf
from singforge.obstruction import (
    EXCLUDED_VERDICT,
    OBSTRUCTED,
    OPEN_VERDICT,
    POSSIBLE,
    GF2Poly,
    IntLaurentPoly,
    SearchExhausted,
    hartley_check,
    murasugi_check,
    symmetry_report,
)

KNOT_8_16 = [1, -4, 8, -9, 8, -4, 1]


def all_gf2(max_deg):
    for bits in range(1, 1 << (max_deg + 1)):
        yield GF2Poly(bits)


def test_gf2_arithmetic():
    a = GF2Poly(0b11)  # 1 + t
    assert (a * a).bits == 0b101
    q, r = divmod(GF2Poly(0b1001), a)  # 1 + t^3 = (1 + t)(1 + t + t^2)
    assert q.bits == 0b111 and r.is_zero()
    assert GF2Poly(0b110).strip_t().bits == 0b11


def test_square_detection_matches_brute_force():
    squares = {(g * g).bits for g in all_gf2(4)}
    for p in all_gf2(8):
        assert p.is_square() == (p.bits in squares)
        if p.is_square():
            assert p.sqrt() * p.sqrt() == p


def test_irreducibility_matches_brute_force():
    for p in all_gf2(8):
        if p.degree < 1:
            continue
        has_factor = any(
            (p % d).is_zero() for d in all_gf2(p.degree // 2) if 1 <= d.degree <= p.degree // 2
        )
        assert p.is_irreducible() == (not has_factor)


def test_8_16_is_excluded():
    start = time.perf_counter()
    rep = symmetry_report(KNOT_8_16)
    elapsed = time.perf_counter() - start
    assert rep["murasugi"]["details"]["mod2"] == "1 + t^3 + t^6"
    assert rep["murasugi"]["details"]["mod2_irreducible"] is True
    assert rep["murasugi"]["verdict"] == OBSTRUCTED
    assert rep["hartley"]["verdict"] == OBSTRUCTED
    assert rep["verdict"] == EXCLUDED_VERDICT
    assert elapsed < 1.0


def test_trefoil():
    assert murasugi_check([1, -1, 1]).verdict == POSSIBLE
    # 1 - t^2 + t^4 is the 12th cyclotomic polynomial, irreducible over Z
    har = hartley_check([1, -1, 1])
    assert har.verdict == OBSTRUCTED
    assert har.details["irreducible"] is True


@pytest.mark.parametrize("delta", [[1], [1, -3, 1]])
def test_unknot_and_figure_eight(delta):
    rep = symmetry_report(delta)
    assert rep["murasugi"]["verdict"] == POSSIBLE
    assert rep["hartley"]["verdict"] == POSSIBLE
    assert rep["verdict"] == OPEN_VERDICT


def test_murasugi_invariant_under_units():
    rng = random.Random(3)
    for _ in range(50):
        coeffs = [rng.randint(-5, 5) for _ in range(rng.randint(1, 7))] + [1]
        p = IntLaurentPoly(coeffs)
        base = murasugi_check(p).verdict
        assert murasugi_check(p.shift(rng.randint(-4, 4))).verdict == base
        assert murasugi_check(p.reciprocal()).verdict == base
        assert murasugi_check(IntLaurentPoly([-a for a in coeffs])).verdict == base


def test_murasugi_witness_reconstructs_delta():
    for delta in ([1, -3, 1], [1, -1, 1], [1, 1, 1, 1, 1]):
        res = murasugi_check(delta)
        assert res.verdict == POSSIBLE
        lam = res.witness["lambda"]
        assert lam % 2 == 1


def test_hartley_finds_planted_factor():
    rng = random.Random(11)
    for _ in range(30):
        f = [rng.choice([-1, 1])] + [rng.randint(-3, 3) for _ in range(rng.randint(0, 4))] + [1]
        D = zf.mul(f, zf.reflect(f))
        assert all(a == 0 for a in D[1::2])
        delta = D[::2]
        if all(a == 0 for a in delta[1:]) and len(delta) == 1:
            continue
        assert hartley_check(delta).verdict == POSSIBLE


def test_hartley_degree_cap():
    with pytest.raises(SearchExhausted):
        hartley_check([1] * 17, cap=30)


def test_laurent_parsing_and_normalization():
    p = IntLaurentPoly.parse("0 0 -1 3 -1")
    assert p.offset == 2 and p.coeffs == (-1, 3, -1)
    assert p.normalized().coeffs == (1, -3, 1)
    assert str(IntLaurentPoly(KNOT_8_16)) == "1 - 4*t + 8*t^2 - 9*t^3 + 8*t^4 - 4*t^5 + t^6"
    assert IntLaurentPoly(KNOT_8_16).is_palindromic()


def test_exhaustive_small_hartley_agrees_with_search():
    # every D(t^2) with small coefficients: a factor f with f(t) f(-t) = +-D exists
    # exactly when hartley_check says possible
    for delta in itertools.product(range(-2, 3), repeat=3):
        if delta[-1] == 0 or delta[0] == 0:
            continue
        D = IntLaurentPoly(list(delta)).at_square()
        found = False
        n = zf.degree(D) // 2
        for f in itertools.product(range(-3, 4), repeat=n + 1):
            if f[-1] == 0:
                continue
            prod = zf.mul(list(f), zf.reflect(list(f)))
            if prod == zf.primitive(D) or prod == zf.neg(zf.primitive(D)):
                found = True
                break
        assert (hartley_check(list(delta)).verdict == POSSIBLE) == found, delta
