from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from core.exceptions import DimensionError, UndefinedOrderError
from schemas.ideal_schema import MonomialIdeal
from services import ideal_service
from services.ideal_service import INFINITE, minimalize
from tests.strategies import exponent_vectors, m_primary_ideals, monomial_ideals


def test_minimalize_drops_divisible_generators():
    assert minimalize({(2, 0), (3, 0), (0, 1)}, 2).generators == ((2, 0), (0, 1))
    I = minimalize({(7, 0, 0), (0, 3, 0), (0, 0, 2), (14, 0, 0)}, 3)
    assert I.generators == ((7, 0, 0), (0, 3, 0), (0, 0, 2))


def test_minimalize_empty_is_zero_ideal():
    I = minimalize([], 3)
    assert I.is_zero
    assert I == ideal_service.zero_ideal(3)


def test_minimalize_rejects_wrong_length():
    with pytest.raises(DimensionError):
        minimalize([(1, 0), (1, 0, 0)], 2)


def test_generators_are_stored_lex_descending():
    I = MonomialIdeal(dim=3, generators=[(0, 0, 2), (7, 0, 0), (2, 1, 1), (0, 3, 0)])
    assert I.generators == ((7, 0, 0), (2, 1, 1), (0, 3, 0), (0, 0, 2))


def test_contains(xyz, xz):
    assert ideal_service.contains(xyz("x^7, y^3, z^2"), (7, 1, 0))
    assert not ideal_service.contains(xz("x^2, z^2"), (1, 1))
    assert not ideal_service.contains(ideal_service.zero_ideal(3), (5, 5, 5))
    with pytest.raises(DimensionError):
        ideal_service.contains(xz("x"), (1, 0, 0))


def test_product_and_power(xyz, xz):
    assert ideal_service.product(xyz("x"), xyz("y")) == xyz("x*y")
    I = xyz("x^7, y^3, z^2")
    assert ideal_service.product(I, ideal_service.unit_ideal(3)) == I
    assert ideal_service.power(xz("x, z"), 2) == xz("x^2, x*z, z^2")
    assert ideal_service.power(I, 0).is_unit
    assert ideal_service.power(xz("x^2, x*z^2, z^4"), 2) == xz("x^4, x^3*z^2, x^2*z^4, x*z^6, z^8")


def test_power_of_zero_ideal():
    Z = ideal_service.zero_ideal(2)
    assert ideal_service.power(Z, 0).is_unit
    assert ideal_service.power(Z, 3).is_zero


def test_sum_and_intersect(xz):
    assert ideal_service.ideal_sum(xz("x^2"), xz("x*z, x^3")) == xz("x^2, x*z")
    assert ideal_service.intersect(xz("x"), xz("z")) == xz("x*z")
    assert ideal_service.intersect(xz("x^2, z"), xz("x")) == xz("x^2, x*z")


def test_colon(xz):
    assert ideal_service.colon(xz("x^2"), xz("x")) == xz("x")
    I = xz("x^2, x*z^2, z^4")
    assert ideal_service.colon(I, ideal_service.unit_ideal(2)) == I
    assert ideal_service.colon(xz("x^2, x*z, z^2"), xz("x, z")) == xz("x, z")
    assert ideal_service.colon(I, ideal_service.zero_ideal(2)).is_unit


def test_equals(xyz, xz, intro_q, intro_i):
    assert ideal_service.equals(xz("x^2, x^3"), xz("x^2"))
    assert not ideal_service.equals(xz("x"), xz("z"))
    assert ideal_service.equals(ideal_service.power(intro_i, 2), ideal_service.product(intro_q, intro_i))
    with pytest.raises(DimensionError):
        ideal_service.equals(xz("x"), xyz("x"))


def test_m_primary_and_colength(xyz):
    assert ideal_service.is_m_primary(xyz("x^7, y^3, z^2"))
    assert not ideal_service.is_m_primary(ideal_service.minimalize([(2, 0), (1, 1)], 2))
    assert ideal_service.is_m_primary(ideal_service.unit_ideal(3))
    assert ideal_service.colength(ideal_service.power(ideal_service.maximal_ideal(2), 2)) == 3
    assert ideal_service.colength(ideal_service.minimalize([(2, 0), (0, 3)], 2)) == 6
    assert ideal_service.colength(xyz("x^3, x^2*y, x*y^2, y^3, z")) == 6
    assert ideal_service.colength(ideal_service.unit_ideal(3)) == 0


def test_colength_infinite_when_not_m_primary(xyz):
    assert ideal_service.colength(xyz("x^2, y")) == INFINITE
    assert ideal_service.colength(ideal_service.zero_ideal(2)) == INFINITE


def test_standard_monomials_match_colength(xyz):
    I = xyz("x^3, x^2*y, x*y^2, y^3, z")
    monomials = list(ideal_service.standard_monomials(I))
    assert len(monomials) == 6
    assert monomials[0] == (0, 0, 0)
    assert not any(ideal_service.contains(I, m) for m in monomials)
    with pytest.raises(ValueError):
        list(ideal_service.standard_monomials(xyz("x, y")))


def test_mu_rsop_and_v(xyz, intro_i):
    assert ideal_service.mu(ideal_service.power(ideal_service.maximal_ideal(3), 2)) == 6
    assert ideal_service.mu(xyz("x")) == 1
    I = xyz("x^3, x^2*y, x*y^2, y^3, z")
    assert ideal_service.rsop_count(I) == 1
    assert ideal_service.v_quotient(I) == 2
    assert ideal_service.v_quotient(xyz("x^4, x^3*y, x^2*y^2, x*y^3, y^4, z")) == 2
    assert ideal_service.rsop_count(intro_i) == 0
    assert ideal_service.v_quotient(intro_i) == 3


def test_order(xyz):
    assert ideal_service.order(xyz("x^7, y^3, z^2")) == 2
    assert ideal_service.order(ideal_service.unit_ideal(3)) == 0
    with pytest.raises(UndefinedOrderError):
        ideal_service.order(ideal_service.zero_ideal(3))


def test_mu_of_maximal_power():
    assert ideal_service.mu_of_maximal_power(3, 2) == 6
    assert ideal_service.mu_of_maximal_power(4, 1) == 4
    for d in range(1, 5):
        for k in range(0, 4):
            m_k = ideal_service.power(ideal_service.maximal_ideal(d), k)
            assert ideal_service.mu(m_k) == ideal_service.mu_of_maximal_power(d, k)


@given(monomial_ideals(), exponent_vectors(2, 6, nonzero=False))
def test_membership_is_upward_closed(I, m):
    if ideal_service.contains(I, m):
        assert ideal_service.contains(I, (m[0] + 1, m[1]))
        assert ideal_service.contains(I, (m[0], m[1] + 1))


@given(monomial_ideals(), monomial_ideals())
def test_product_inside_intersection(I, J):
    IJ = ideal_service.product(I, J)
    assert ideal_service.is_subset(IJ, ideal_service.intersect(I, J))
    assert ideal_service.is_subset(ideal_service.intersect(I, J), ideal_service.ideal_sum(I, J))


@given(monomial_ideals(), monomial_ideals())
def test_colon_adjunction(I, J):
    # (I : J) * J lies inside I
    assert ideal_service.is_subset(ideal_service.product(ideal_service.colon(I, J), J), I)


@given(m_primary_ideals())
def test_colength_counts_standard_monomials(I):
    assert ideal_service.colength(I) == sum(1 for _ in ideal_service.standard_monomials(I))


@given(monomial_ideals(max_gens=3), st.integers(0, 4), st.integers(0, 4))
def test_power_is_additive(I, a, b):
    assert ideal_service.power(I, a + b) == ideal_service.product(ideal_service.power(I, a), ideal_service.power(I, b))


@given(monomial_ideals(), monomial_ideals())
def test_product_commutes(I, J):
    assert ideal_service.product(I, J) == ideal_service.product(J, I)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_colength_of_maximal_power_counts_low_degrees(d, k):
    # monomials of degree < k in d variables
    assert ideal_service.colength(ideal_service.power(ideal_service.maximal_ideal(d), k)) == comb(k - 1 + d, d)


@given(st.one_of(monomial_ideals(), monomial_ideals(dim=3, max_gens=5), m_primary_ideals(dim=3)))
def test_colength_is_finite_exactly_for_m_primary_ideals(I):
    assert (ideal_service.colength(I) != INFINITE) == ideal_service.is_m_primary(I)
