# -*- coding: utf-8 -*-
"""
test_identity_suite.py
----------------------
Registro delle identità: lati sinistro/destro, guardie, sweep e identità ausiliarie.
"""
from fractions import Fraction

import pytest

from identity_manager.exact import identity_suite
from identity_manager.exact.cases import IdentityCase
from identity_manager.exact.errors import GuardViolation, UnknownIdentityError
from identity_manager.exact.legendre_poly import evaluate, legendre_via_recursion
from identity_manager.exact.series_engine import binomial_sequence, lemma_rhs


def case(identity_id, n, **params):
    return IdentityCase(identity_id=identity_id, n=n, extra_params=params)


PARAMETER_FREE = [d.identity_id for d in identity_suite.registry_list() if not d.params]


def test_registry_is_closed():
    ids = [d.identity_id for d in identity_suite.registry_list()]
    assert len(ids) == 27
    assert len(set(ids)) == 27
    assert {"main_theorem", "gamma_mu", "log_moment", "arcsin_odd", "helper_bataille"} <= set(ids)


def test_lookup():
    assert identity_suite.lookup("gamma_mu").params == ("mu",)
    assert identity_suite.lookup("log_m_n2").min_n == 2
    with pytest.raises(UnknownIdentityError) as err:
        identity_suite.lookup("unknown")
    assert isinstance(err.value, KeyError)


def test_lhs_examples():
    for n in range(1, 12):
        assert identity_suite.lhs_sum(case("main_transformed", n, x=1)) == 0
    assert identity_suite.lhs_sum(case("mu_half", 1)) == Fraction(2, 3)
    assert identity_suite.lhs_sum(case("arcsin_even", 1)) == Fraction(1, 16)


def test_rhs_examples():
    assert identity_suite.rhs_closed(case("int_unit", 1)) == Fraction(1, 2)
    assert identity_suite.rhs_closed(case("int_unit", 7)) == 0
    assert identity_suite.rhs_closed(case("log_m1", 2)) == Fraction(1, 288)
    assert identity_suite.rhs_closed(case("log_m1", 1)) == Fraction(-5, 36)
    assert identity_suite.rhs_closed(case("log_m0", 1)) == Fraction(3, 4)
    assert identity_suite.rhs_closed(case("arcsin_odd", 1)) == Fraction(1, 384)


def test_verify_case_examples():
    result = identity_suite.verify_case(case("main_theorem", 5, x=0))
    assert result.equal and result.lhs == result.rhs == Fraction(1, 5)
    result = identity_suite.verify_case(case("sn_closed", 1))
    assert result.equal and result.lhs == Fraction(5, 4)
    result = identity_suite.verify_case(case("combo_squared", 2))
    assert result.equal and result.lhs == Fraction(-1, 120)


def test_guards():
    with pytest.raises(GuardViolation) as err:
        identity_suite.verify_case(case("log_moment", 3, m=2))
    assert err.value.condition == "0 <= m < n-1"
    assert isinstance(err.value, ValueError)
    with pytest.raises(GuardViolation):
        identity_suite.lhs_sum(case("mu_half", 0))
    with pytest.raises(GuardViolation):
        identity_suite.rhs_closed(case("main_theorem", 3))
    with pytest.raises(GuardViolation):
        identity_suite.verify_case(case("log_m_n2", 1))


def test_out_of_range_probe():
    probe = identity_suite.probe_case(case("arcsin_odd", 0))
    assert probe.skipped
    assert probe.lhs == Fraction(5, 8)
    assert probe.rhs == Fraction(1, 8)
    assert not probe.equal


def test_resolve_token():
    assert identity_suite.resolve_token("n", 4) == 4
    assert identity_suite.resolve_token("n+1", 4) == 5
    assert identity_suite.resolve_token("n-2", 4) == 2
    assert identity_suite.resolve_token("7/3", 4) == Fraction(7, 3)


def test_alternating_zero_sweep():
    results = identity_suite.verify_range("alternating_zero", range(1, 101))
    assert len(results) == 100
    assert all(r.equal for r in results)


def test_excluded_range_is_empty():
    assert identity_suite.verify_range("arcsin_odd", range(0, 1)) == []


def test_log_moment_enumeration():
    admissible, excluded = identity_suite.enumerate_cases("log_moment", range(0, 5))
    pairs = [(c.param("m"), c.n) for c in admissible]
    assert sorted(pairs) == sorted([(0, 2), (0, 3), (1, 3), (0, 4), (1, 4), (2, 4)])
    assert all(identity_suite.guard_violation(c) for c in excluded)


def test_gamma_mu_sweep():
    results = identity_suite.verify_range("gamma_mu", range(1, 13))
    # μ ∈ {1/2, 3/2, 7/3, 5, n, n+1}; i duplicati con μ = 5 (n = 4 e n = 5) sono rimossi
    assert len(results) == 12 * 6 - 2
    assert all(r.equal for r in results)


def test_parallel_ordering_matches_serial():
    serial = identity_suite.verify_range("main_theorem", range(1, 8), {"x": ["1/2", "-4"]})
    parallel = identity_suite.verify_range("main_theorem", range(1, 8), {"x": ["1/2", "-4"]}, jobs=2)
    assert [r.case for r in serial] == [r.case for r in parallel]
    assert [r.lhs for r in serial] == [r.lhs for r in parallel]


@pytest.mark.parametrize("x", identity_suite.DEFAULT_X_GRID)
def test_main_theorem_paths_agree(x):
    for n in range(1, 13):
        paths = {identity_suite.main_theorem_rhs(n, x, p) for p in ("recursion", "sum", "series")}
        assert len(paths) == 1


@pytest.mark.parametrize("x", ["0", "1", "-1/2", "3/7"])
def test_lemma_chain_to_main_theorem(x):
    for n in range(1, 12):
        side = Fraction((-1) ** n, 2 * n) * lemma_rhs(binomial_sequence(x, n + 1), n)
        assert side == identity_suite.main_theorem_rhs(n, x)


def test_partial_fraction_and_linear_combination():
    for n in range(1, 25):
        lhs = lambda identity_id: identity_suite.lhs_sum(case(identity_id, n))
        assert lhs("mu_n") - lhs("mu_n_plus_1") == lhs("combo_squared")
        assert lhs("int_unit_k") == lhs("alternating_zero") - lhs("int_unit")


def test_closed_form_values():
    values = identity_suite.closed_form_values(1)
    assert values.S_n == Fraction(-3, 2)
    assert values.Q_n == Fraction(-1, 2)
    for n in range(12):
        values = identity_suite.closed_form_values(n)
        p = legendre_via_recursion(n)
        assert values.S_n == evaluate(p, Fraction(-3, 2))
        assert values.Q_n == evaluate(p, Fraction(-1, 2))


def test_helper_identities():
    assert identity_suite.lhs_sum(case("helper_bataille", 2)) == 6
    assert identity_suite.lhs_sum(case("helper_odd_harmonic", 2)) == 2
    assert identity_suite.helper_identities_check(30)
    assert identity_suite.helper_first_failure(30) is None
    with pytest.raises(ValueError):
        identity_suite.helper_first_failure(0)


def test_arcsin_pipeline():
    for big_n in range(1, 13):
        lhs, rhs = identity_suite.arcsin_pipeline_sides(big_n)
        assert lhs == rhs
        assert identity_suite.arcsin_sum_via_integrals(big_n) == identity_suite.arcsin_sum(big_n)
    assert identity_suite.arcsin_sum_via_integrals(1) == Fraction(5, 8)
    with pytest.raises(ValueError):
        identity_suite.arcsin_pipeline_sides(0)


@pytest.mark.parametrize("identity_id", [d.identity_id for d in identity_suite.registry_list()])
def test_every_identity_small_sweep(identity_id):
    results = identity_suite.verify_range(identity_id, range(0, 16))
    assert results
    assert all(r.equal for r in results), [r.case for r in results if not r.equal]


@pytest.mark.slow
@pytest.mark.parametrize("identity_id", [d.identity_id for d in identity_suite.registry_list()])
def test_full_sweep(identity_id):
    n_max = 150 if identity_id in PARAMETER_FREE else 60
    results = identity_suite.verify_range(identity_id, range(0, n_max + 1))
    assert all(r.equal for r in results)
