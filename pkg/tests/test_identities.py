import json
from fractions import Fraction

import pytest

from jacobsthal3 import (
    DomainError,
    IDENTITIES,
    IDENTITY_NAMES,
    Identity,
    J_power,
    KValue,
    get_identity,
    j_power,
    verify_all,
    verify_identity,
)
from jacobsthal3.identities import _run

SYM = KValue.symbolic()
K2 = KValue.fixed(2)
DEFAULT_KS = [KValue.fixed(Fraction(1, 2)), KValue.fixed(1), KValue.fixed(2),
              KValue.fixed(3), KValue.fixed(Fraction(7, 3)), SYM]

EXPECTED_NAMES = (
    "commute_JJ", "commute_jj", "commute_Jj", "lincomb_eq1", "lincomb_eq2",
    "square_a1", "split_a2", "addition_jmn", "det_J_formula", "det_j_formula",
    "closed_form_J", "closed_form_j", "neg_matrix_theorem", "neg_binet",
    "neg_scalar_lucas", "neg_generating_b1", "inverse_b2", "multi_index_m1",
    "classic_binet_b1", "classic_binet_b2",
)


def test_registry_is_the_closed_set_in_order():
    assert IDENTITY_NAMES == EXPECTED_NAMES
    assert len(IDENTITIES) == 20


def test_square_identity_over_two_k_values():
    report = verify_identity("square_a1", [K2, SYM], (1, 8))
    assert report.passed
    assert report.checks_performed == 16


def test_lincomb_symbolic():
    report = verify_identity("lincomb_eq1", [SYM], (2, 10))
    assert report.passed
    assert report.checks_performed == 9


def test_each_identity_passes_on_its_default_grid():
    reports = verify_all(DEFAULT_KS, (1, 10), (1, 10))
    assert [r.identity for r in reports] == list(EXPECTED_NAMES)
    assert all(r.passed for r in reports)
    assert all(r.counterexample is None for r in reports)


def test_minimal_grid_still_passes():
    reports = verify_all([K2], (1, 1), (1, 1))
    assert len(reports) == 20
    assert all(r.passed for r in reports)
    # The two linear-combination identities need n >= 2, so their clamped
    # grid is empty here and they pass vacuously.
    by_name = {r.identity: r for r in reports}
    assert by_name["lincomb_eq1"].checks_performed == 0
    assert by_name["commute_JJ"].checks_performed == 1


def test_degenerate_k_equal_one_passes():
    reports = verify_all([KValue.fixed(1)], (1, 6), (1, 6))
    assert all(r.passed for r in reports)


def test_reports_are_deterministic():
    first = verify_all([K2, SYM], (1, 4), (1, 3))
    second = verify_all([K2, SYM], (1, 4), (1, 3))
    assert first == second


def test_mutated_identity_fails_at_first_grid_point():
    # Same statement as square_a1 but with J(2n+1) on the right-hand side.
    def wrong(k, m, n):
        lhs = j_power(k, n + 1) * j_power(k, n + 1)
        rhs = j_power(k, 1) * j_power(k, 1) * J_power(k, 2 * n + 1)
        return [(lhs, rhs)]

    mutated = Identity("square_a1_mutated", "deliberately wrong", wrong)
    report = _run(mutated, [K2], (1, 4), None)
    assert report.status == "fail"
    assert report.counterexample is not None
    assert report.counterexample.n == 1
    assert report.counterexample.k == "2"
    assert report.checks_performed == 1
    assert report.counterexample.lhs != report.counterexample.rhs


def test_counterexample_is_lexicographically_first():
    def wrong(k, m, n):
        # Fails whenever n is even, so the first failure must be (m=1, n=2).
        return [(n % 2, 1)]

    ident = Identity("parity_probe", "fails on even n", wrong, uses_m=True)
    report = _run(ident, [K2, SYM], (1, 5), (1, 2))
    assert report.status == "fail"
    assert report.counterexample.k == "2"
    assert report.counterexample.m == 1
    assert report.counterexample.n == 2
    assert report.checks_performed == 2


def test_unknown_identity_rejected():
    with pytest.raises(DomainError):
        verify_identity("nonsense", [K2], (1, 3))
    with pytest.raises(DomainError):
        get_identity("J_mn")


def test_domain_violations_rejected_not_clamped():
    with pytest.raises(DomainError):
        verify_identity("lincomb_eq1", [K2], (1, 5))
    with pytest.raises(DomainError):
        verify_identity("commute_JJ", [K2], (3, 1))
    with pytest.raises(DomainError):
        verify_identity("commute_JJ", [K2], (1, 3))  # m range missing
    with pytest.raises(DomainError):
        verify_identity("commute_JJ", [K2], (1, 3), (0, 3))
    with pytest.raises(DomainError):
        verify_identity("neg_binet", [], (1, 3))


def test_inverse_identity_skips_symbolic_k():
    report = verify_identity("inverse_b2", DEFAULT_KS, (1, 5))
    assert report.passed
    assert report.checks_performed == 25  # five rational samples, no sym
    with pytest.raises(DomainError):
        verify_identity("inverse_b2", [SYM], (1, 5))


def test_k_independent_identities_ignore_k_set():
    report = verify_identity("classic_binet_b1", DEFAULT_KS, (0, 12))
    assert report.passed
    assert report.checks_performed == 13


def test_report_json_shape():
    report = verify_identity("det_J_formula", [K2], (1, 3))
    data = json.loads(report.to_json())
    assert data == {"identity": "det_J_formula", "status": "pass", "checks": 3}

    def wrong(k, m, n):
        return [(J_power(k, n), J_power(k, n + 1))]

    bad = _run(Identity("probe", "wrong", wrong), [K2], (2, 4), None)
    data = json.loads(bad.to_json())
    assert data["status"] == "fail"
    assert data["checks"] == 1
    ce = data["counterexample"]
    assert set(ce) == {"k", "n", "lhs", "rhs"}
    assert ce["k"] == "2" and ce["n"] == 2
    assert ce["lhs"].startswith("[[")


def test_addition_extends_to_mixed_signs():
    # Not stated for negative indices; checked as an extension because the
    # negative-index theorems use such products implicitly.
    for k in (K2, SYM):
        for m in range(-4, 5):
            for n in range(-4, 5):
                assert J_power(k, m + n) == J_power(k, m) * J_power(k, n)
