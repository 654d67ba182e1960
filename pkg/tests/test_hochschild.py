import pytest

from qschur_hh.hochschild import (CohomologyClass, LiftError, cochain_dims, even_part_hilbert, hh_dims,
                                  hochschild_complex, hom_kernel_dims, monomial_quotient_hilbert,
                                  multiplication_table_check, presented_ring_dims, ring_generators,
                                  verify_ring_presentation)
from qschur_hh.linalg import GF, QQ


def kernel_table(e, n):
    s, r = divmod(n - 1, 4)
    return e - 2 * s - 1 if r in (0, 1) else e - 2 * s - 2


@pytest.mark.parametrize("e", range(2, 7))
def test_cochain_dims(e):
    assert cochain_dims(e) == [2 * e - n - 1 for n in range(2 * e - 1)]


@pytest.mark.parametrize("e", range(2, 7))
def test_hom_kernel_dims(e):
    k = hom_kernel_dims(e)
    for n in range(1, 2 * e - 2):
        assert k[n] == kernel_table(e, n)
    # Ker d_{2(e-1)} = 0
    assert k[2 * (e - 1)] == 0


def test_long_exact_sequence_bookkeeping():
    # HH^{n+1} = dim Hom(Ker d_n) - dim Hom(R_n) + dim Hom(Ker d_{n-1}) for 1 <= n
    e = 4
    c, k, h = cochain_dims(e), hom_kernel_dims(e), hh_dims(e)
    for n in range(1, 2 * e - 2):
        assert h[n + 1] == k[n] - c[n] + k[n - 1]


@pytest.mark.parametrize("e", range(2, 7))
@pytest.mark.parametrize("field", [QQ, GF(2), GF(3), GF(5)], ids=str)
def test_hh_dims(e, field):
    assert hh_dims(e, field).as_list() == [e] + [1] * (2 * (e - 1))


def test_hh_rejects_small_e():
    with pytest.raises(ValueError):
        hh_dims(1)


def test_unit_and_degree_zero_products():
    e = 3
    hc = hochschild_complex(e)
    zs, x, y = ring_generators(e)
    one = hc.unit()
    for b in zs + [x, y]:
        assert one * b == b
        assert b * one == b
    assert (zs[0] * zs[1]).is_zero()


def test_scalar_and_difference():
    zs, x, y = ring_generators(3)
    assert (x - x).is_zero()
    assert not (x * 2).is_zero()
    assert (-y) * y == -(y * y)


def test_noncocycle_rejected():
    hc = hochschild_complex(3)
    # the degree-0 cochain e1 on P(1,1) is not central
    with pytest.raises(ValueError):
        CohomologyClass(hc, 0, {0: 1})
    with pytest.raises(LiftError):
        hc.yoneda(0, hc.unit().representative, 0, {0: 1})


def test_lift_choice_independence():
    hc = hochschild_complex(4)
    zs, x, y = ring_generators(4)
    for a, b in [(x, y), (y, y), (y, x * y)]:
        alt = hc.yoneda(a.degree, a.representative, b.degree, b.representative, reverse=True)
        assert hc.cls(a.degree + b.degree, alt) == a * b


@pytest.mark.parametrize("e", [2, 3, 4])
def test_ring_presentation(e):
    rpt = verify_ring_presentation(e)
    assert rpt.passed, rpt.failures()
    assert rpt.presented_dims == rpt.hh_dims
    doc = rpt.to_json()
    assert doc["passed"] and doc["e"] == e


def test_ring_e3_specifics():
    zs, x, y = ring_generators(3)
    assert not (x * y).is_zero()
    assert (x * y * y).is_zero()
    assert not (y * y).is_zero()
    assert (y * y * y).is_zero()


@pytest.mark.parametrize("p", [2, 3])
def test_ring_presentation_prime_fields(p):
    assert verify_ring_presentation(3, GF(p)).passed


@pytest.mark.parametrize("e", [2, 3, 4])
def test_multiplication_table(e):
    assert multiplication_table_check(e) == []


def test_presented_dims():
    assert presented_ring_dims(2).as_list() == [2, 1, 1]
    assert presented_ring_dims(4).as_list() == [4, 1, 1, 1, 1, 1, 1]
    assert monomial_quotient_hilbert([1], [[3]], 5).as_list() == [1, 1, 1]
    assert monomial_quotient_hilbert([1, 1], [[2, 0], [0, 2]], 5).as_list() == [1, 2, 1]
    with pytest.raises(ValueError):
        monomial_quotient_hilbert([0, 1], [[0, 2]], 4)


@pytest.mark.parametrize("e", range(2, 7))
def test_even_part(e):
    assert even_part_hilbert(e) == hh_dims(e).even_part()
    assert even_part_hilbert(e) == {0: e, **{2 * s: 1 for s in range(1, e)}}


def test_even_part_examples():
    assert even_part_hilbert(3) == {0: 3, 2: 1, 4: 1}
    assert even_part_hilbert(2) == {0: 2, 2: 1}
