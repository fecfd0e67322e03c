import pytest
from hypothesis import given, strategies as st

from src.fusion.errors import HypothesisViolation
from src.fusion.root_system import (
    A2,
    C2,
    G2,
    LIE_TYPES,
    RHO,
    RootVector,
    Weight,
    apply_word,
    bilinear,
    coroot_pairing,
    dominant_conjugate_signed,
    freudenthal_dim,
    lie_type,
    root_to_weight,
    simple_reflection,
    summand_order_key,
    weight_multiplicities,
    weight_to_root,
    weyl_dim,
    weyl_group_words,
    weyl_orbit,
)

coords = st.integers(min_value=0, max_value=3)
types = st.sampled_from(["A2", "C2", "G2"])


@pytest.mark.parametrize(
    "tag, nu, expected",
    [
        ("A2", (0, 0), 1),
        ("A2", (1, 0), 3),
        ("A2", (1, 1), 8),
        ("A2", (2, 0), 6),
        ("A2", (2, 1), 15),
        ("C2", (1, 0), 4),
        ("C2", (0, 1), 5),
        ("C2", (2, 0), 10),
        ("C2", (1, 1), 16),
        ("G2", (1, 0), 7),
        ("G2", (0, 1), 14),
        ("G2", (2, 0), 27),
        ("G2", (1, 1), 64),
    ],
)
def test_weyl_dim_table(tag, nu, expected):
    assert weyl_dim(tag, nu) == expected


def test_weyl_dim_rejects_nondominant():
    with pytest.raises(HypothesisViolation):
        weyl_dim("A2", (-1, 2))


def test_unknown_type_is_a_value_error():
    with pytest.raises(ValueError, match="B2"):
        lie_type("B2")


def test_simple_roots_are_cartan_columns():
    assert root_to_weight(A2, (1, 0)) == Weight(2, -1)
    assert root_to_weight(A2, (0, 1)) == Weight(-1, 2)
    assert root_to_weight(C2, (0, 1)) == Weight(-2, 2)
    assert root_to_weight(G2, (0, 1)) == Weight(-3, 2)


@pytest.mark.parametrize("lt", [A2, C2, G2], ids=lambda lt: lt.tag)
def test_weight_to_root_inverts_root_to_weight(lt):
    for alpha in lt.positive_roots:
        assert weight_to_root(lt, root_to_weight(lt, alpha)) == alpha


def test_coroot_pairings():
    assert coroot_pairing(C2, RHO, (1, 1)) == 3
    assert coroot_pairing(C2, RHO, (2, 1)) == 2
    assert coroot_pairing(G2, RHO, (1, 1)) == 4
    with pytest.raises(HypothesisViolation):
        coroot_pairing(A2, RHO, (2, 1))


def test_signed_conjugation_examples():
    assert dominant_conjugate_signed("A2", (-1, 2)) == (Weight(1, 1), -1)
    assert dominant_conjugate_signed("A2", (2, 3)) == (Weight(2, 3), 1)
    # the orbit of (-1, 0) meets a wall
    assert dominant_conjugate_signed("A2", (-1, 0))[1] == 0


@given(types, st.integers(-6, 6), st.integers(-6, 6))
def test_signed_conjugation_lands_strictly_dominant(tag, x, y):
    w, sign = dominant_conjugate_signed(tag, (x, y))
    assert sign in (-1, 0, 1)
    if sign:
        assert w.w1 > 0 and w.w2 > 0
        assert w in weyl_orbit(lie_type(tag), (x, y))


@pytest.mark.parametrize("lt", [A2, C2, G2], ids=lambda lt: lt.tag)
def test_weyl_group_has_expected_order(lt):
    words = weyl_group_words(lt)
    assert len(words) == lt.weyl_order
    assert len({apply_word(lt, word, RHO) for word in words}) == lt.weyl_order
    assert len(weyl_orbit(lt, RHO)) == lt.weyl_order


def test_weight_multiplicities_adjoint_a2():
    mult = weight_multiplicities("A2", (1, 1))
    assert mult[Weight(0, 0)] == 2
    assert sum(mult.values()) == 8


def test_weight_multiplicities_small_g2():
    mult = weight_multiplicities("G2", (1, 0))
    assert mult[Weight(0, 0)] == 1
    assert sum(mult.values()) == 7
    assert all(m == 1 for m in mult.values())


@given(types, coords, coords)
def test_freudenthal_matches_weyl_dimension(tag, a, b):
    assert freudenthal_dim(tag, (a, b)) == weyl_dim(tag, (a, b))


def test_summand_order_puts_cartan_component_first():
    top = Weight(2, 0)
    ordered = sorted([Weight(0, 1), Weight(2, 0)], key=lambda nu: summand_order_key(A2, top, nu))
    assert ordered == [Weight(2, 0), Weight(0, 1)]
    assert summand_order_key(A2, top, top) == (0, -2, 0)


def test_weight_parse_and_arithmetic():
    w = Weight.parse("2, 1")
    with pytest.raises(ValueError):
        Weight.parse("1,2,3")
    assert w == Weight(2, 1)
    assert w + (1, 1) == Weight(3, 2)
    assert w - RHO == Weight(1, 0)
    assert not (w - (3, 0)).is_dominant


def test_registry_is_complete():
    assert set(LIE_TYPES) == {"A2", "C2", "G2"}
    assert all(isinstance(alpha, RootVector) for alpha in G2.positive_roots)


@pytest.mark.parametrize(
    "lt, w, v, expected",
    [(A2, (1, 1), (1, 1), 2), (C2, (0, 1), (0, 1), 2), (G2, (1, 0), (3, 2), 3)],
    ids=["A2", "C2", "G2"],
)
def test_bilinear_examples(lt, w, v, expected):
    assert bilinear(lt, w, v) == expected


def test_simple_reflection_examples():
    assert simple_reflection(A2, 1, (1, 0)) == Weight(-1, 1)
    assert simple_reflection(C2, 2, (0, 1)) == Weight(2, -1)
    for lt in (A2, C2, G2):
        assert simple_reflection(lt, 1, (0, 5)) == Weight(0, 5)
    with pytest.raises(ValueError):
        simple_reflection(A2, 3, (1, 0))


@given(types, st.sampled_from([1, 2]), st.integers(-8, 8), st.integers(-8, 8))
def test_simple_reflection_is_an_involution(tag, i, x, y):
    lt = lie_type(tag)
    assert simple_reflection(lt, i, simple_reflection(lt, i, (x, y))) == Weight(x, y)


@given(types, st.integers(-6, 6), st.integers(-6, 6))
def test_signed_conjugation_matches_full_group(tag, x, y):
    lt = lie_type(tag)
    images = [(apply_word(lt, word, (x, y)), (-1) ** len(word)) for word in weyl_group_words(lt)]
    result = dominant_conjugate_signed(tag, (x, y))
    if any(w.w1 == 0 or w.w2 == 0 for w, _ in images):
        assert result == (Weight(x, y), 0)
    else:
        chamber = [(w, sign) for w, sign in images if w.w1 > 0 and w.w2 > 0]
        assert len(chamber) == 1
        assert result == chamber[0]


@pytest.mark.parametrize("tag", ["A2", "C2", "G2"])
@pytest.mark.parametrize("lam", [(1, 0), (0, 1), (1, 1), (2, 1)])
def test_weight_multiplicities_are_weyl_invariant(tag, lam):
    lt = lie_type(tag)
    mult = weight_multiplicities(tag, lam)
    for eta, m in mult.items():
        for word in weyl_group_words(lt):
            assert mult[apply_word(lt, word, eta)] == m
