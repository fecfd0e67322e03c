import pytest
from hypothesis import assume, given, strategies as st

from src.fusion.errors import HypothesisViolation
from src.fusion.lr_oracle import (
    build_column,
    critical_indices,
    dominance_values,
    enumerate_T,
    klimyk_decompose,
    klimyk_multiplicities,
    klimyk_total,
    lattice_points_T,
    littelmann_tableau_count,
    littelmann_tableaux,
    orient_g2,
)
from src.fusion.root_system import Weight, weyl_dim

coords = st.integers(min_value=0, max_value=2)
types = st.sampled_from(["A2", "C2", "G2"])


def test_klimyk_square_of_standard_a2():
    assert klimyk_multiplicities("A2", (1, 0), (1, 0)) == {Weight(2, 0): 1, Weight(0, 1): 1}


def test_klimyk_adjoint_square_a2():
    mult = klimyk_multiplicities("A2", (1, 1), (1, 1))
    assert mult == {
        Weight(2, 2): 1,
        Weight(3, 0): 1,
        Weight(0, 3): 1,
        Weight(1, 1): 2,
        Weight(0, 0): 1,
    }
    assert next(iter(mult)) == Weight(2, 2)


def test_klimyk_decompose_model():
    d = klimyk_decompose("G2", (1, 0), (1, 0))
    assert d.lie_type == "G2"
    assert {e.nu: e.multiplicity for e in d.entries} == {(2, 0): 1, (0, 1): 1, (1, 0): 1, (0, 0): 1}
    assert [e.nu for e in d.entries][0] == (2, 0)


def test_klimyk_rejects_nondominant():
    with pytest.raises(HypothesisViolation, match="not dominant"):
        klimyk_total("C2", (0, -1), (1, 0))


@pytest.mark.parametrize(
    "tag, lam, mu, expected",
    [
        ("A2", (1, 1), (1, 1), 6),
        ("A2", (1, 0), (0, 1), 2),
        ("C2", (1, 0), (1, 0), 3),
        ("G2", (1, 0), (1, 0), 4),
        ("G2", (0, 1), (1, 0), 3),
        ("G2", (1, 0), (0, 1), 3),
    ],
)
def test_classical_models(tag, lam, mu, expected):
    assert len(enumerate_T(tag, lam, mu)) == expected
    assert klimyk_total(tag, lam, mu) == expected


def test_orientation_for_g2():
    assert orient_g2(Weight(0, 1), Weight(1, 0)) == (Weight(0, 1), Weight(1, 0))
    assert orient_g2(Weight(1, 0), Weight(0, 1)) == (Weight(0, 1), Weight(1, 0))
    with pytest.raises(HypothesisViolation):
        orient_g2(Weight(1, 1), Weight(0, 1))


def test_shifted_model_outside_chamber_is_empty():
    assert lattice_points_T("A2", (0, -1), (1, 1)) == []


@pytest.mark.parametrize("lam, mu, expected", [((0, 0), (0, 0), 1), ((1, 0), (1, 0), 4), ((0, 1), (1, 0), 3)])
def test_tableau_counts(lam, mu, expected):
    result = littelmann_tableaux(lam, mu)
    assert result.count == expected
    assert result.scanned == result.reduced == result.critical


def test_tableau_count_needs_n2_zero():
    with pytest.raises(HypothesisViolation, match="n2 = 0"):
        littelmann_tableau_count((1, 0), (0, 1))


def test_textbook_indices_miss_run_boundaries():
    # the 3|4 boundary sits 3 rows into the run when y34 = 1; the run of 2s has no textbook index
    result = littelmann_tableaux((0, 0), (1, 0))
    assert set(result.textbook_disagreements) == {(0, 0, 1, 0, 0, 0), (1, 0, 0, 0, 0, 0)}
    assert result.count == 1


def test_column_construction():
    assert build_column(1, (0, 0, 0, 0, 0, 0)) == [1] * 6
    assert build_column(1, (0, 0, 1, 0, 0, 0)) == [3, 3, 3, 4, 4, 4]
    with pytest.raises(HypothesisViolation):
        build_column(0, (1, 0, 0, 0, 0, 0))


def test_dominance_values_start_from_lambda():
    assert dominance_values([], 2, 1) == [(12, 6)]
    values = dominance_values([6] * 6, 1, 0)
    assert values[-1] == (0, 0)
    assert critical_indices((0, 0, 0, 0, 0, 1))[0] == (6, 1)


@given(types, coords, coords, coords, coords)
def test_classical_count_matches_klimyk(tag, m1, m2, n1, n2):
    assume(tag != "G2" or min(m2, n2) == 0)
    assert len(enumerate_T(tag, (m1, m2), (n1, n2))) == klimyk_total(tag, (m1, m2), (n1, n2))


@given(types, coords, coords, coords, coords)
def test_klimyk_dimension_and_symmetry(tag, m1, m2, n1, n2):
    lam, mu = (m1, m2), (n1, n2)
    mult = klimyk_multiplicities(tag, lam, mu)
    assert sum(m * weyl_dim(tag, nu) for nu, m in mult.items()) == weyl_dim(tag, lam) * weyl_dim(tag, mu)
    assert mult == klimyk_multiplicities(tag, mu, lam)
    assert mult[Weight(m1 + n1, m2 + n2)] == 1


@given(coords, coords, coords)
def test_tableaux_match_g2_model(m1, m2, n1):
    assert littelmann_tableau_count((m1, m2), (n1, 0)) == len(enumerate_T("G2", (m1, m2), (n1, 0)))
