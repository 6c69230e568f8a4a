import pytest

from singforge.certificate import FAIL, INCONCLUSIVE, PASS
from singforge.mixedpoly import MixedPoly, glue
from singforge.nondegeneracy import check_inner_nondegenerate, check_strongly_inner_nondegenerate


def M(*terms):
    return MixedPoly({t[:4]: t[4] for t in terms})


HOPF = M((2, 0, 0, 0, 1), (0, 0, 2, 0, -1))
CONSTANT_CRITICAL = M((2, 0, 0, 0, 1), (0, 0, 2, 2, -1))
PRODUCT = M((1, 0, 1, 0, 1), (1, 0, 0, 1, 1), (0, 1, 1, 0, 1), (0, 1, 0, 1, 1))


def test_hopf_passes_both():
    weak = check_inner_nondegenerate(HOPF)
    strong = check_strongly_inner_nondegenerate(HOPF)
    assert weak.status == PASS and strong.status == PASS
    assert weak.margin > 1.9


def test_constant_critical_value_is_weak_but_not_strong():
    assert check_inner_nondegenerate(CONSTANT_CRITICAL).status == PASS
    strong = check_strongly_inner_nondegenerate(CONSTANT_CRITICAL)
    assert strong.status == FAIL
    wit = strong.witnesses[0]
    assert wit["constant_value"]
    assert abs(wit["critical_value"] - (-1)) < 1e-9


def test_product_of_real_parts_fails_with_converged_witness():
    cert = check_inner_nondegenerate(PRODUCT)
    assert cert.status == FAIL
    wit = cert.witnesses[0]
    assert wit["defect"] < 1e-10
    assert abs(wit["value"]) < 1e-10


def test_two_face_semiholomorphic():
    hat = M((1, 0, 2, 0, 1), (0, 0, 4, 0, -1))
    tilde = M((1, 0, 2, 0, 1), (3, 0, 0, 0, -1))
    cert = check_inner_nondegenerate(glue([hat, tilde]))
    assert cert.status in (PASS, INCONCLUSIVE)
    assert len(cert.parts) >= 2


def test_certificate_records_tolerances():
    cert = check_inner_nondegenerate(HOPF)
    obj = cert.to_json()
    assert obj["pass"] is True
    assert {"check", "margin", "slack", "grid", "witnesses"} <= set(obj)


@pytest.mark.parametrize("f", [HOPF, CONSTANT_CRITICAL])
def test_strong_implies_weak(f):
    if check_strongly_inner_nondegenerate(f).status == PASS:
        assert check_inner_nondegenerate(f).status == PASS
