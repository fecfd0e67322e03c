import logging

import pytest
from hypothesis import assume, given, strategies as st

from src.fusion.errors import HypothesisViolation, UnboundedSystemError
from src.fusion.fusion_polytope import (
    ARITY,
    SystemBuilder,
    build_S_system,
    degree,
    enumerate_lattice_points,
    lattice_points_S,
    weight_statistic,
)
from src.fusion.root_system import Weight

coords = st.integers(min_value=0, max_value=2)
types = st.sampled_from(["A2", "C2", "G2"])


def test_builder_renders_labels():
    system = SystemBuilder("demo", "abc").le(3, a=1, b=1, c=-1).gt(0, c=2).build()
    assert system.describe() == ["a+b-c <= 3", "2c > 0"]


def test_builder_rejects_unknown_variable():
    with pytest.raises(ValueError, match="unknown variables"):
        SystemBuilder("demo", "ab").le(1, z=1)


def test_box_enumerates_in_lexicographic_order():
    system = SystemBuilder("box", ("a", "b")).le(1, a=1).le(2, b=1).build()
    assert enumerate_lattice_points(system) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]


def test_strict_and_lower_bounds():
    system = SystemBuilder("strip", ("a",)).lt(3, a=1).ge(1, a=1).build()
    assert enumerate_lattice_points(system) == [(1,), (2,)]
    pinned = SystemBuilder("pinned", ("a", "b")).eq(2, a=1).le(0, b=1).build()
    assert enumerate_lattice_points(pinned) == [(2, 0)]


def test_le_min_keeps_every_bound():
    system = SystemBuilder("m", ("a",)).le_min([4, 1, 3], a=1).build()
    assert len(enumerate_lattice_points(system)) == 2


def test_unbounded_coordinate_is_named():
    system = SystemBuilder("open", ("a", "b")).le(1, a=1).build()
    with pytest.raises(UnboundedSystemError) as excinfo:
        enumerate_lattice_points(system)
    assert excinfo.value.coordinate == "b"
    assert "open" in str(excinfo.value)


def test_bound_through_later_coordinate_needs_reordering():
    # a <= b <= 2 bounds a only through b, which comes later
    late = SystemBuilder("late", ("a", "b")).le(0, a=1, b=-1).le(2, b=1).build()
    with pytest.raises(UnboundedSystemError) as excinfo:
        enumerate_lattice_points(late)
    assert excinfo.value.coordinate == "a"

    early = SystemBuilder("early", ("b", "a")).le(0, a=1, b=-1).le(2, b=1).build()
    assert len(enumerate_lattice_points(early)) == 6


def test_debug_log_lists_constraints(caplog):
    caplog.set_level(logging.DEBUG)
    system = SystemBuilder("box", ("a",)).le(1, a=1).build()
    enumerate_lattice_points(system)
    record = next(r for r in caplog.records if r.getMessage() == "Enumerated system")
    assert record.context == {"system": "box", "points": 2, "constraints": ["a <= 1"]}


def test_degree_and_weight_statistic():
    assert degree((1, 2, 3)) == 6
    assert weight_statistic("A2", (1, 0, 0)) == Weight(2, -1)
    assert weight_statistic("A2", (0, 1, 0)) == Weight(1, 1)
    with pytest.raises(HypothesisViolation, match="arity"):
        weight_statistic("C2", (0, 0, 0))


@pytest.mark.parametrize(
    "tag, lam, mu, expected",
    [
        ("A2", (0, 0), (0, 0), 1),
        ("A2", (1, 0), (0, 1), 2),
        ("A2", (1, 1), (1, 1), 6),
        ("C2", (1, 0), (1, 0), 3),
        ("G2", (1, 0), (1, 0), 4),
        ("G2", (0, 1), (1, 0), 3),
    ],
)
def test_polytope_sizes(tag, lam, mu, expected):
    assert len(lattice_points_S(tag, lam, mu)) == expected


def test_nondominant_polytope_is_empty():
    assert lattice_points_S("C2", (-1, 0), (1, 0)) == []


def test_g2_gate_names_the_condition():
    with pytest.raises(HypothesisViolation, match=r"min\{m2,n2\}=0"):
        build_S_system("G2", (1, 1), (0, 1))


@given(types, coords, coords, coords, coords)
def test_polytope_structure(tag, m1, m2, n1, n2):
    assume(tag != "G2" or min(m2, n2) == 0)
    lam, mu = Weight(m1, m2), Weight(n1, n2)
    system = build_S_system(tag, lam, mu)
    points = enumerate_lattice_points(system)

    zero = (0,) * ARITY[tag]
    assert zero in points
    assert [s for s in points if degree(s) == 0] == [zero]
    for s in points:
        assert system.contains(s)
        assert (lam + mu - weight_statistic(tag, s)).is_dominant
    assert len(lattice_points_S(tag, mu, lam)) == len(points)
