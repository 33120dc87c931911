from itertools import combinations

import pytest
from hypothesis import given, strategies as st

from oooooob.models.moves import (alloption, options, pair_options, subset_options,
                                  unioptions)
from oooooob.models.position import Position, Variant

positions = st.lists(st.integers(min_value=1, max_value=7), max_size=6).map(Position)


def _brute_force(variant, p):
    # every move written out index by index
    piles = list(p)
    k = len(piles)
    if variant is Variant.A:
        moves = [s for r in range(1, k + 1) for s in combinations(range(k), r)]
    elif variant is Variant.B:
        moves = [(i,) for i in range(k)] + ([tuple(range(k))] if k else [])
    else:
        moves = [(i,) for i in range(k)] + list(combinations(range(k), 2))
    result = set()
    for move in moves:
        after = [x - 1 if i in move else x for i, x in enumerate(piles)]
        result.add(Position(after))
    return frozenset(result)


def test_terminal_has_no_options():
    for variant in Variant:
        assert options(variant, Position()) == frozenset()


def test_version_b_options():
    p = Position((1, 1, 2))
    assert unioptions(p) == {Position((1, 2)), Position((1, 1, 1))}
    assert alloption(p) == Position((1,))
    assert options(Variant.B, p) == {Position((1, 2)), Position((1, 1, 1)), Position((1,))}


def test_version_c_options():
    p = Position((1, 1, 3))
    assert pair_options(p) == {Position((3,)), Position((1, 2))}
    assert options(Variant.C, p) == {Position((1, 3)), Position((1, 1, 2)),
                                     Position((3,)), Position((1, 2))}


def test_version_a_options():
    assert subset_options(Position((2, 2))) == {Position((1, 2)), Position((1, 1))}
    assert len(subset_options(Position((1, 2, 3)))) == 7


def test_options_accept_raw_tuples():
    assert options(Variant.B, (2, 1, 1)) == options(Variant.B, Position((1, 1, 2)))


@pytest.mark.parametrize('variant', list(Variant))
@given(p=positions)
def test_options_match_brute_force(variant, p):
    assert options(variant, p) == _brute_force(variant, p)


@pytest.mark.parametrize('variant', list(Variant))
@given(p=positions)
def test_options_are_canonical_and_smaller(variant, p):
    for q in options(variant, p):
        assert list(q) == sorted(q)
        assert 0 not in q
        assert q.total_tokens < p.total_tokens
