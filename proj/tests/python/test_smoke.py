from fractions import Fraction

import pytest

import fpkit


@pytest.fixture
def p2():
    return fpkit.linear_pn([0, 1, 3])


def test_linear_model_invariants(p2):
    assert fpkit.residue_sum(p2, 0) == 0
    assert fpkit.c1_power(p2) == 9
    assert isinstance(fpkit.c1_power(p2), Fraction)
    assert fpkit.residue_constraints_hold(p2)
    assert fpkit.chern_monomial(p2, [2]) == 3
    assert fpkit.line_bundle_power(p2) == 1
    assert fpkit.line_bundle_power(p2, [0, -1, -3]) == 1


def test_chi_y(p2):
    assert fpkit.chi_y_from_data(p2) == {0: 1, 1: -1, 2: 1}
    assert fpkit.chi_y_hrr_projective(2) == fpkit.chi_y_from_data(p2)
    assert fpkit.k_coefficients(p2) == [3, -3, 1]


def test_report_and_verdict(p2):
    report = fpkit.report(p2)
    assert report["c1_power"] == "9"
    assert report["c1cn1"] == "9"
    assert fpkit.hattori_verdict(p2)["passes"] is True
    assert fpkit.distinctness_analysis(p2)["verdict"] == "distinct"


def test_canonicalize_round_trip(p2):
    assert fpkit.canonicalize(p2) == p2


def test_invalid_input_raises():
    with pytest.raises(fpkit.ValidationError, match="zero weight"):
        fpkit.canonicalize('{"n": 1, "fixed_points": [{"label": "P", "weights": [0]}]}')
    with pytest.raises(ValueError):
        fpkit.linear_pn([1, 1])


def test_pair_and_first_chern(p2):
    d = fpkit.hyperplane_model([0, 1])
    assert fpkit.pair_restriction_check(p2, d)["passes"] is True
    assert fpkit.first_chern_candidates(7)["admissible"] == ["8", "4"]


def test_search():
    report, survivors = fpkit.search(1, 3)
    assert len(survivors) == 3
    assert report["classes"]["counterexamples"] == 0
    with pytest.raises(fpkit.SearchSpaceTooLarge):
        fpkit.search(3, 5, max_leaves=10)
