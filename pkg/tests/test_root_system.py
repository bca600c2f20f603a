import pytest
from hypothesis import given, strategies as st

from schubloc.root_system import (
    CartanType,
    InvalidCartanType,
    cartan_matrix,
    group_order,
    is_negative,
    is_positive,
    positive_roots,
    reflect_simple,
)

ALL_TYPES = ["A1", "A2", "A3", "A5", "B2", "B3", "B4", "C2", "C3", "C4", "D3", "D4", "D5", "E6", "E7", "E8", "F4", "G2"]

# fundamental degrees, written out independently of the package tables
DEGREES = {
    "A1": (2,), "A2": (2, 3), "A3": (2, 3, 4), "A5": (2, 3, 4, 5, 6),
    "B2": (2, 4), "B3": (2, 4, 6), "B4": (2, 4, 6, 8),
    "C2": (2, 4), "C3": (2, 4, 6), "C4": (2, 4, 6, 8),
    "D3": (2, 3, 4), "D4": (2, 4, 4, 6), "D5": (2, 4, 5, 6, 8),
    "E6": (2, 5, 6, 8, 9, 12), "E7": (2, 6, 8, 10, 12, 14, 18), "E8": (2, 8, 12, 14, 18, 20, 24, 30),
    "F4": (2, 6, 8, 12), "G2": (2, 6),
}


def test_parse():
    assert CartanType.parse("A3") == CartanType("A", 3)
    assert CartanType.parse(" g2 ") == CartanType("G", 2)
    assert str(CartanType.parse("E8")) == "E8"


@pytest.mark.parametrize("text", ["A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "H3", "A", "3A", ""])
def test_invalid_types(text):
    with pytest.raises(InvalidCartanType):
        CartanType.parse(text)


def test_cartan_matrices_examples():
    assert cartan_matrix(CartanType.parse("A2")) == ((2, -1), (-1, 2))
    assert cartan_matrix(CartanType.parse("B2")) == ((2, -1), (-2, 2))
    assert cartan_matrix(CartanType.parse("G2")) == ((2, -1), (-3, 2))
    assert cartan_matrix(CartanType.parse("C2")) == ((2, -2), (-1, 2))


@pytest.mark.parametrize("name", ALL_TYPES)
def test_cartan_matrix_shape(name):
    A = cartan_matrix(CartanType.parse(name))
    n = len(A)
    for i in range(n):
        assert A[i][i] == 2
        for j in range(n):
            if i != j:
                assert A[i][j] <= 0
                assert (A[i][j] == 0) == (A[j][i] == 0)


def test_reflect_examples():
    A2 = CartanType.parse("A2")
    assert reflect_simple(A2, 1, (1, 0)) == (-1, 0)
    assert reflect_simple(A2, 1, (0, 1)) == (1, 1)
    assert reflect_simple(A2, 2, (1, 0)) == (1, 1)
    with pytest.raises(IndexError):
        reflect_simple(A2, 3, (1, 0))
    with pytest.raises(IndexError):
        reflect_simple(A2, 0, (1, 0))


def test_positive_roots_examples():
    assert positive_roots(CartanType.parse("A2")) == {(1, 0), (0, 1), (1, 1)}
    assert positive_roots(CartanType.parse("A1")) == {(1,)}
    counts = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "G2": 6, "F4": 24}
    for name, n in counts.items():
        assert len(positive_roots(CartanType.parse(name))) == n


@pytest.mark.parametrize("name", ALL_TYPES)
def test_root_count_matches_degrees(name):
    # |positive roots| = sum of (degree - 1)
    assert len(positive_roots(CartanType.parse(name))) == sum(d - 1 for d in DEGREES[name])


@pytest.mark.parametrize("name", ALL_TYPES)
def test_group_order_from_degrees(name):
    expected = 1
    for d in DEGREES[name]:
        expected *= d
    assert group_order(CartanType.parse(name)) == expected


@pytest.mark.parametrize("name", ALL_TYPES)
def test_reflections_permute_roots(name):
    ct = CartanType.parse(name)
    pos = positive_roots(ct)
    roots = pos | {tuple(-c for c in b) for b in pos}
    for beta in pos:
        assert is_positive(beta) and not is_negative(beta)
    for i in range(1, ct.rank + 1):
        alpha = tuple(int(k == i - 1) for k in range(ct.rank))
        assert {reflect_simple(ct, i, x) for x in roots} == roots
        for beta in pos:
            if beta != alpha:
                assert reflect_simple(ct, i, beta) in pos


@st.composite
def type_index_vector(draw):
    name = draw(st.sampled_from(ALL_TYPES))
    ct = CartanType.parse(name)
    i = draw(st.integers(1, ct.rank))
    x = tuple(draw(st.lists(st.integers(-50, 50), min_size=ct.rank, max_size=ct.rank)))
    return ct, i, x


@given(type_index_vector())
def test_reflection_is_involution(data):
    ct, i, x = data
    assert reflect_simple(ct, i, reflect_simple(ct, i, x)) == x
