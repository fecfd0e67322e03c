import itertools

import pytest
from hypothesis import assume, given, strategies as st

import src.fusion.lemma_verifier as lemma_verifier
from src.fusion.errors import HypothesisViolation
from src.fusion.lemma_verifier import (
    base_step_sum,
    check_A2_class_bijection,
    check_C2_recursions,
    check_G2_recursions,
    check_lemmas,
    class_parameters,
    k_case_count,
    m_case_counts,
    z_case_counts,
)
from schemas.fusion_models import LemmaCheck, LemmaReport

coords = st.integers(min_value=0, max_value=2)


def _assert_passed(report):
    assert report.passed, [f"{c.name}: {c.closed_form} vs {c.enumerated} {c.detail}" for c in report.failures()]


# --- A2 ---

def test_class_parameters_worked_example():
    assert class_parameters((2, 1), (1, 2), b=2, c=0) == (2, 1, 1)


@pytest.mark.parametrize("lam, mu", [((2, 1), (1, 2)), ((0, 0), (0, 0)), ((3, 0), (0, 3)), ((2, 2), (1, 3))])
def test_a2_class_bijection(lam, mu):
    report = check_A2_class_bijection(lam, mu)
    _assert_passed(report)
    assert report.lemma == "A2 class bijection"
    assert any(c.name == "R2+1 = r-max(R1,0)+1" for c in report.checks)


def test_a2_trivial_pair_has_single_class():
    report = check_A2_class_bijection((0, 0), (0, 0))
    sizes = next(c for c in report.checks if c.name == "|M∩S| = |M∩T| for every class")
    assert sizes.closed_form == 1


# --- C2 ---

@pytest.mark.parametrize("lam, mu", [((1, 1), (1, 1)), ((0, 2), (0, 1)), ((0, 0), (0, 0)), ((2, 0), (0, 1)), ((2, 1), (1, 0))])
def test_c2_recursions(lam, mu):
    _assert_passed(check_C2_recursions(lam, mu))


def test_c2_difference_formula_value():
    report = check_C2_recursions((0, 2), (0, 1))
    check = next(c for c in report.checks if c.name.startswith("|2T^C| - |2T^C_{l-w2,m-w2}|"))
    assert check.closed_form == check.enumerated == 1


def test_c2_second_regime_is_observed_not_gated():
    report = check_C2_recursions((1, 0), (1, 0))
    assert report.passed
    assert any("min{n1,m2}+min{m1,n2}+1" in c.name for c in report.observations)
    assert not any("min{n1,m2}+min{m1,n2}+1" in c.name for c in report.checks)


SECOND_REGIME = [
    "|2T^C| - |2T^C_{l-w1,m-w1}| = min{n1,m2}+min{m1,n2}+1",
    "2S^C_{l-w1,m-w1} -> 2S^C, (b,c+1,0)",
    "|2S^C| - |2S^C_{l-w1,m-w1}| = min{m1,n2}+min{n1,m2}+1",
]


@pytest.mark.parametrize("lam, mu", [((1, 0), (1, 0)), ((2, 1), (1, 0)), ((3, 0), (2, 2))])
def test_c2_second_regime_formulas_hold(lam, mu):
    report = check_C2_recursions(lam, mu)
    observed = {c.name: c for c in report.observations}
    for name in SECOND_REGIME:
        assert observed[name].passed, observed[name]


# --- G2 ---

def test_g2_closed_forms():
    assert base_step_sum(0, 0) == 1
    assert base_step_sum(2, 3) == 5
    assert k_case_count(1, 2, 4) == 3
    assert z_case_counts(1, 2, 4) == (0, 1, 2)
    assert m_case_counts(1, 2, 4) == (2, 1)
    assert k_case_count(1, 1, 10) == sum(z_case_counts(1, 1, 10)) == sum(m_case_counts(1, 1, 10)) == 5
    assert k_case_count(0, 1, 0) == 0


@pytest.mark.parametrize("lam, mu", [((2, 0), (3, 0)), ((1, 2), (4, 0)), ((0, 0), (0, 0)), ((0, 1), (2, 0)), ((2, 0), (0, 1))])
def test_g2_recursions(lam, mu):
    _assert_passed(check_G2_recursions(lam, mu))


def test_g2_base_step_is_compared():
    report = check_G2_recursions((2, 0), (3, 0))
    base = next(c for c in report.checks if c.name.startswith("|3S^G| = sum_i"))
    assert base.closed_form == base.enumerated == 5


def test_g2_rejects_inadmissible_pair():
    with pytest.raises(HypothesisViolation):
        check_G2_recursions((1, 1), (1, 1))


def test_broken_formula_is_localized(monkeypatch):
    monkeypatch.setattr(lemma_verifier, "k_case_count", lambda m1, m2, n1: -1)
    report = check_G2_recursions((1, 2), (4, 0))
    assert not report.passed
    names = {c.name for c in report.failures()}
    assert "k = |Z1|+|Z2|+|Z3| case formula" in names
    assert "k = m" in names


def test_observations_do_not_gate():
    report = LemmaReport(
        lemma="demo",
        type="A2",
        lam=(0, 0),
        mu=(0, 0),
        checks=[LemmaCheck(name="ok", passed=True)],
        observations=[LemmaCheck(name="flagged", passed=False)],
    )
    assert report.passed
    assert report.failures() == []


def test_dispatch_by_type():
    assert check_lemmas("A2", (1, 0), (0, 1)).lemma == "A2 class bijection"
    assert check_lemmas("C2", (1, 0), (0, 1)).lemma == "C2 recursions"
    assert check_lemmas("G2", (1, 0), (0, 1)).lemma == "G2 recursions"


@given(coords, coords, coords, coords)
def test_every_lemma_holds_on_small_weights(m1, m2, n1, n2):
    _assert_passed(check_A2_class_bijection((m1, m2), (n1, n2)))
    _assert_passed(check_C2_recursions((m1, m2), (n1, n2)))
    assume(min(m2, n2) == 0)
    _assert_passed(check_G2_recursions((m1, m2), (n1, n2)))


@pytest.mark.slow
@pytest.mark.parametrize("tag, bound", [("A2", 5), ("C2", 5), ("G2", 4)])
def test_lemma_sweep(tag, bound):
    span = range(bound + 1)
    for m1, m2, n1, n2 in itertools.product(span, span, span, span):
        if tag == "G2" and min(m2, n2) > 0:
            continue
        _assert_passed(check_lemmas(tag, (m1, m2), (n1, n2)))
