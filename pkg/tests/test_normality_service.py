import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schemas.normality_schema import BoundSource, Verdict
from schemas.verify_schema import CorpusSpec
from services.corpus_service import random_integrally_closed
from services import ideal_service, newton_service, normality_service
from services.normality_service import (
    closure_of_power, first_failure_witness, is_integrally_closed, is_normal, minimal_points, rrv_bound,
)
from tests.strategies import monomial_ideals


def test_rrv_bound():
    assert [rrv_bound(d) for d in range(1, 5)] == [1, 1, 2, 3]


def test_is_integrally_closed(xz, intro_i):
    assert is_integrally_closed(xz("x^2, x*z, z^2"))
    assert not is_integrally_closed(xz("x^2, z^2"))
    assert is_integrally_closed(intro_i)
    assert is_integrally_closed(ideal_service.zero_ideal(2))


def test_lemma_ideal_is_normal(xz):
    report = is_normal(xz("x^2, x*z^2, z^4"))
    assert report.verdict == Verdict.NORMAL
    assert report.bound_used == 1
    assert report.bound_source == BoundSource.RRV
    assert report.first_failure is None


def test_intro_ideal_fails_at_the_square(intro_i):
    report = is_normal(intro_i)
    assert report.verdict == Verdict.NOT_NORMAL
    assert [(c.n, c.is_closed) for c in report.checked_powers] == [(1, True), (2, False)]
    assert report.first_failure.n == 2

    witness = report.first_failure.witness
    I2 = ideal_service.power(intro_i, 2)
    assert not ideal_service.contains(I2, witness)
    assert newton_service.np_membership(intro_i, witness, scale=2)
    assert witness == first_failure_witness(intro_i, 2)


def test_maximal_ideal_is_normal():
    assert is_normal(ideal_service.maximal_ideal(3)).verdict == Verdict.NORMAL


def test_user_bound_below_rrv_is_undetermined():
    report = is_normal(ideal_service.maximal_ideal(4), max_power=1)
    assert report.verdict == Verdict.UNDETERMINED
    assert report.bound_source == BoundSource.USER
    assert report.bound_used == 1


def test_user_bound_reaching_rrv_is_normal():
    report = is_normal(ideal_service.maximal_ideal(3), max_power=3)
    assert report.verdict == Verdict.NORMAL
    assert report.bound_source == BoundSource.RRV
    assert report.bound_used == 3
    assert len(report.checked_powers) == 3
    assert report.note


def test_zero_and_unit_ideals_are_normal():
    for I in (ideal_service.zero_ideal(3), ideal_service.unit_ideal(3)):
        report = is_normal(I)
        assert report.verdict == Verdict.NORMAL
        assert report.checked_powers == []
        assert report.note


def test_zero_and_unit_ideals_report_the_rrv_bound_with_a_user_bound():
    for I, max_power in ((ideal_service.unit_ideal(3), 1), (ideal_service.zero_ideal(3), 5)):
        report = is_normal(I, max_power=max_power)
        assert report.verdict == Verdict.NORMAL
        assert report.bound_source == BoundSource.RRV
        assert report.bound_used == max(max_power, rrv_bound(3))


def test_invalid_powers():
    with pytest.raises(ValueError):
        is_normal(ideal_service.maximal_ideal(2), max_power=0)
    with pytest.raises(ValueError):
        normality_service.missing_points(ideal_service.maximal_ideal(2), 0)


def test_theorem_witness(xyz):
    I = xyz("x^2, x*y, y^2, z^4, x*z, y*z^3")
    assert first_failure_witness(I, 1) == (0, 1, 2)
    assert first_failure_witness(xyz("x^2, x*y, y^2, z^4, x*z^2, y*z^2"), 1) is None


def test_minimal_points():
    assert minimal_points([(2, 1), (1, 1), (0, 3), (1, 2)]) == [(0, 3), (1, 1)]
    assert minimal_points([]) == []


def test_closure_of_power(xz):
    I = xz("x^2, z^2")
    assert closure_of_power(I, 2) == ideal_service.power(ideal_service.maximal_ideal(2), 4)
    assert closure_of_power(I, 1) == newton_service.integral_closure(I)


@given(monomial_ideals(max_exp=3, max_gens=3))
def test_closure_of_power_matches_closure_of_the_power(I):
    I2 = ideal_service.power(I, 2)
    assert closure_of_power(I, 2) == newton_service.integral_closure(I2)


@given(monomial_ideals(max_exp=3, max_gens=3))
def test_witness_is_stable_under_swapping_variables(I):
    swapped = ideal_service.minimalize([(g[1], g[0]) for g in I.generators], 2)
    assert is_integrally_closed(I) == is_integrally_closed(swapped)
    w = first_failure_witness(I, 1)
    w_swapped = first_failure_witness(swapped, 1)
    assert (w is None) == (w_swapped is None)
    if w is not None:
        minimal = minimal_points(normality_service.missing_points(swapped, 1))
        assert (w[1], w[0]) in minimal


@given(monomial_ideals(max_exp=3, max_gens=3))
def test_integrally_closed_ideals_in_two_variables_are_normal(I):
    closure = newton_service.integral_closure(I)
    assert is_normal(closure).verdict == Verdict.NORMAL
    assert is_normal(closure, max_power=2).checked_powers[-1].is_closed


@pytest.mark.slow
def test_normal_corpus_ideals_stay_closed_beyond_the_bound():
    spec = CorpusSpec(dim=3, trials=6, seed=20240917, box=3)
    for I in random_integrally_closed(spec):
        if is_normal(I).verdict != Verdict.NORMAL:
            continue
        for n in range(1, 2 * (I.dim - 1) + 1):
            assert closure_of_power(I, n) == ideal_service.power(I, n)


@settings(max_examples=15)
@given(monomial_ideals(dim=3, max_exp=3, max_gens=3), st.permutations(range(3)))
def test_verdict_is_stable_under_permuting_variables(I, perm):
    permuted = ideal_service.minimalize([tuple(g[p] for p in perm) for g in I.generators], 3)
    report, permuted_report = is_normal(I), is_normal(permuted)
    assert report.verdict == permuted_report.verdict
    assert [c.is_closed for c in report.checked_powers] == [c.is_closed for c in permuted_report.checked_powers]
