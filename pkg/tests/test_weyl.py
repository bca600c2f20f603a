from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from schubloc.root_system import is_negative, is_positive
from schubloc.weyl import GroupTooLarge, NotReducedError, WeylGroup, format_word, parse_word

from oracles import brute_reduced_words, bruhat_brute, determinant, hook_length_count

SMALL = ["A1", "A2", "A3", "B2", "G2"]


@pytest.fixture(scope="module")
def A2():
    return WeylGroup("A2")


def test_from_word_examples(A2):
    assert A2.from_word(()).is_identity()
    s1 = A2.from_word((1,))
    # columns are the images of alpha_1, alpha_2
    assert s1.matrix == ((-1, 0), (1, 1))
    assert A2.from_word((1, 2, 1)) == A2.from_word((2, 1, 2))
    with pytest.raises(IndexError):
        A2.from_word((3,))


def test_length_examples():
    for name, n in [("A2", 3), ("A3", 6), ("G2", 6), ("B3", 9)]:
        W = WeylGroup(name)
        assert W.identity.length == 0
        assert W.simple_reflection(1).length == 1
        assert W.long_element().length == n == len(W.positive_roots)


def test_is_reduced_examples(A2):
    assert A2.is_reduced((1, 2, 1))
    assert not A2.is_reduced((1, 1))
    assert A2.is_reduced(())
    assert not A2.is_reduced((1, 2, 1, 2))


def test_bruhat_examples(A2):
    s1, s2 = A2.from_word((1,)), A2.from_word((2,))
    assert not A2.bruhat_leq(s1, s2)
    assert A2.bruhat_leq(s2, A2.from_word((1, 2)))
    for v in A2.all_elements():
        assert A2.bruhat_leq(A2.identity, v)
        assert v.bruhat_le(A2.long_element())


def test_demazure_examples(A2):
    assert A2.demazure_product((1, 1)) == A2.from_word((1,))
    assert A2.demazure_product((1, 2, 1, 2)) == A2.from_word((1, 2, 1))
    assert A2.demazure_product((1, 2)) == A2.from_word((1, 2))
    assert A2.demazure_product(()).is_identity()


@pytest.mark.parametrize("name,size", [("A1", 2), ("A2", 6), ("A3", 24), ("B2", 8), ("G2", 12), ("B3", 48), ("C3", 48), ("D4", 192)])
def test_all_elements(name, size):
    W = WeylGroup(name)
    elems = W.all_elements()
    assert len(elems) == size == W.order()
    assert len(set(elems)) == size
    assert elems[0].is_identity()
    keys = [(u.length, W.canonical_reduced_word(u)) for u in elems]
    assert keys == sorted(keys)


def test_all_elements_A1():
    W = WeylGroup("A1")
    assert W.all_elements() == [W.identity, W.simple_reflection(1)]


def test_group_cap():
    with pytest.raises(GroupTooLarge):
        WeylGroup("E8").all_elements()
    with pytest.raises(GroupTooLarge):
        WeylGroup("A3", max_size=10).all_elements()
    # words still work past the cap
    assert WeylGroup("E8").long_element().length == 120


def test_descents_examples(A2):
    assert A2.identity.descents() == frozenset()
    assert A2.from_word((1,)).descents() == {1}
    for name in ["A3", "B3", "G2", "F4"]:
        W = WeylGroup(name)
        assert W.long_element().descents() == set(range(1, W.rank + 1))


def test_canonical_word_examples(A2):
    assert A2.canonical_reduced_word(A2.long_element()) == (1, 2, 1)
    assert A2.canonical_reduced_word(A2.identity) == ()
    assert A2.canonical_reduced_word(A2.from_word((2,))) == (2,)


def test_reduced_word_counts():
    A2 = WeylGroup("A2")
    assert len(A2.all_reduced_words(A2.long_element())) == 2
    A3 = WeylGroup("A3")
    # reduced words of the long element of S_n correspond to staircase tableaux
    assert len(A3.all_reduced_words(A3.long_element())) == hook_length_count((3, 2, 1)) == 16
    A4 = WeylGroup("A4")
    assert len(A4.all_reduced_words(A4.long_element())) == hook_length_count((4, 3, 2, 1))
    assert A2.all_reduced_words(A2.from_word((1,))) == [(1,)]
    assert len(A3.all_reduced_words(A3.long_element(), cap=5)) == 5


@pytest.mark.parametrize("name", SMALL + ["B3"])
def test_reduced_words_agree_with_brute_force(name):
    W = WeylGroup(name)
    for v in W.all_elements():
        words = W.all_reduced_words(v)
        assert words == brute_reduced_words(W, v)
        assert W.canonical_reduced_word(v) == words[0]


def test_beta_sequence_examples(A2):
    assert A2.beta_sequence((1, 2)) == [(1, 0), (1, 1)]
    assert A2.beta_sequence((1, 2, 1)) == [(1, 0), (1, 1), (0, 1)]
    assert A2.beta_sequence((2,)) == [(0, 1)]
    with pytest.raises(NotReducedError):
        A2.beta_sequence((1, 1))


@pytest.mark.parametrize("name", SMALL + ["B3"])
def test_element_invariants(name):
    W = WeylGroup(name)
    pos = set(W.positive_roots)
    roots = pos | {tuple(-c for c in b) for b in pos}
    for v in W.all_elements():
        assert {v.act(b) for b in roots} == roots
        assert determinant([[v.matrix[c][r] for c in range(W.rank)] for r in range(W.rank)]) in (1, -1)
        assert bool(v.descents()) == (not v.is_identity())
        for i in v.descents():
            assert v.right_mult(i).length == v.length - 1
            assert not v.goes_up(i)
        for i in set(range(1, W.rank + 1)) - v.descents():
            assert v.right_mult(i).length == v.length + 1
        assert v.inverse() * v == W.identity
        assert v.inverse().length == v.length
        words = W.all_reduced_words(v)
        inv = W.inversion_set(v)
        assert len(inv) == v.length
        for q in words:
            beta = W.beta_sequence(q)
            assert all(is_positive(b) for b in beta)
            assert len(set(beta)) == len(beta)
            assert set(beta) == inv
            # inversion set as {gamma > 0 : v^{-1} gamma < 0}
            assert {g for g in pos if is_negative(v.inverse().act(g))} == inv


@pytest.mark.parametrize("name", ["A2", "B2", "A3", "G2"])
def test_bruhat_matches_subword_criterion(name):
    W = WeylGroup(name)
    elems = W.all_elements()
    words = {v: brute_reduced_words(W, v) for v in elems}
    for v in elems:
        for w in elems:
            assert W.bruhat_leq(w, v) == bruhat_brute(W, w, v, words[v]), (w, v)


def _word_strategy(rank, max_len=8):
    return st.lists(st.integers(1, rank), max_size=max_len).map(tuple)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "A3", "B2", "G2", "B3"]).flatmap(
    lambda t: st.tuples(st.just(t), _word_strategy(WeylGroup(t).rank))))
def test_word_properties(data):
    name, q = data
    W = WeylGroup(name)
    u = W.from_word(q)
    assert u.length <= len(q)
    assert (u.length == len(q)) == W.is_reduced(q)
    d = W.demazure_product(q)
    # Demazure product is the Bruhat maximum of the products of all subwords
    products = {W.from_word(q[p] for p in pos) for r in range(len(q) + 1) for pos in combinations(range(len(q)), r)}
    assert d in products
    assert all(W.bruhat_leq(x, d) for x in products)


def test_word_serialization():
    assert parse_word("1,2,1") == (1, 2, 1)
    assert parse_word("") == ()
    assert parse_word(" 3 ") == (3,)
    assert format_word((1, 2, 1)) == "1,2,1"
    with pytest.raises(ValueError):
        parse_word("1;2")
