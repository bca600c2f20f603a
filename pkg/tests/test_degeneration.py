import pytest

from schubloc.degeneration import ChainPair, fiber_trichotomy, stage, step_map, verify_chain
from schubloc.weyl import WeylGroup


@pytest.fixture(scope="module")
def A2():
    return WeylGroup("A2")


def P(W, word, S):
    return ChainPair(W.from_word(word), frozenset(S))


def test_stage_examples(A2):
    Q, s1 = (1, 2, 1), A2.from_word((1,))
    assert stage(A2, Q, s1, 3) == {P(A2, (1,), ())}
    assert stage(A2, Q, s1, 2) == {P(A2, (1,), ()), P(A2, (), {3})}
    assert stage(A2, Q, s1, 1) == {P(A2, (1,), ()), P(A2, (), {3})}
    assert stage(A2, Q, s1, 0) == {P(A2, (), {1}), P(A2, (), {3})}
    with pytest.raises(IndexError):
        stage(A2, Q, s1, 4)
    with pytest.raises(ValueError):
        stage(A2, (1,), A2.from_word((2,)), 0)


def test_step_map_examples(A2):
    Q, s1 = (1, 2, 1), A2.from_word((1,))
    f = step_map(A2, Q, s1, 3)
    assert f(P(A2, (), {3})) == P(A2, (1,), ())
    assert f(P(A2, (1,), ())) == P(A2, (1,), ())
    g = step_map(A2, Q, s1, 2)
    for pair in stage(A2, Q, s1, 1):
        assert g(pair) == pair


def test_fiber_examples(A2):
    Q, s1 = (1, 2, 1), A2.from_word((1,))
    case, fiber = fiber_trichotomy(A2, Q, s1, 3, P(A2, (1,), ()))
    assert case == 3
    assert fiber == {P(A2, (1,), ()), P(A2, (), {3})}
    s2 = A2.from_word((2,))
    case, fiber = fiber_trichotomy(A2, (1, 2), s2, 2, P(A2, (2,), ()))
    assert case == 2
    assert fiber == {P(A2, (), {2})}
    with pytest.raises(ValueError):
        fiber_trichotomy(A2, Q, s1, 3, P(A2, (), {3}))


def test_verify_chain_example(A2):
    report = verify_chain(A2, (1, 2, 1), A2.from_word((1,)))
    assert report.ok
    assert report.sizes == [2, 2, 2, 1]
    data = report.to_json()
    assert [s["i"] for s in data["stages"]] == [0, 1, 2, 3]
    assert data["stages"][0]["pairs"] == [{"wprime_word": [], "S": [1]}, {"wprime_word": [], "S": [3]}]
    assert data["stages"][1]["pairs"] == [{"wprime_word": [], "S": [3]}, {"wprime_word": [1], "S": []}]
    assert all(data["checks"].values())


def test_verify_chain_w_equals_v():
    W = WeylGroup("B3")
    Q = (1, 2, 3, 2)
    v = W.from_word(Q)
    report = verify_chain(W, Q, v)
    assert report.ok
    for i, pairs in enumerate(report.stages):
        assert pairs == [ChainPair(W.from_word(Q[:i]), frozenset(range(i + 1, len(Q) + 1)))]


def test_verify_chain_identity(A2):
    report = verify_chain(A2, (2, 1, 2), A2.identity)
    assert report.ok
    assert report.stages == [[ChainPair(A2.identity, frozenset())]] * 4


def test_verify_chain_rejects_bad_input(A2):
    with pytest.raises(ValueError):
        verify_chain(A2, (1,), A2.from_word((2,)))
    with pytest.raises(ValueError):
        verify_chain(A2, (1, 1), A2.identity)


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "A3"])
def test_all_chains(name):
    W = WeylGroup(name)
    from schubloc.subword import build_complex

    for v in W.all_elements():
        for Q in W.all_reduced_words(v, cap=2):
            for w in W.interval(v):
                report = verify_chain(W, Q, w)
                assert report.ok, report.failures
                assert report.sizes[-1] == 1
                assert report.sizes[0] == len(build_complex(W, Q, w).facets)
