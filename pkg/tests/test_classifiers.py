import pytest

from oooooob.classifiers import (CLASSIFIERS, REDUCTIONS, ClassifierId,
                                 UnknownClassifierError, classifier_id, classify,
                                 get_classifier, get_reduction)
from oooooob.classifiers.common import (NOT_APPLICABLE, Applicability, all_even_rule,
                                        classic_two_pile, odd_count_rule, version_a_rule)
from oooooob.models.memo import MemoTable
from oooooob.models.position import Outcome, Position, Variant
from oooooob.models.solver import outcome
from oooooob.verify.regions import PileCountRegion

P, N = Applicability(Outcome.P), Applicability(Outcome.N)


def test_applicability_text():
    assert str(P) == 'P'
    assert str(NOT_APPLICABLE) == 'n/a'
    assert not NOT_APPLICABLE.applicable


@pytest.mark.parametrize('piles, expected', [
    ((2, 4), P),
    ((1, 2), N),
    ((3, 3), N),
    ((1, 2, 3), NOT_APPLICABLE),
])
def test_classic_two_pile(piles, expected):
    assert classic_two_pile(Position(piles)) == expected


def test_version_a_rule():
    assert version_a_rule(Position((2, 4, 6, 8))) == P
    assert version_a_rule(Position((2, 4, 6, 7))) == N
    assert version_a_rule(Position()) == P


def test_all_even_rule():
    assert all_even_rule(Variant.B, Position((2, 4))) == P
    assert all_even_rule(Variant.C, Position((2, 2, 6))) == P
    assert all_even_rule(Variant.C, Position((1, 2))) == NOT_APPLICABLE
    with pytest.raises(ValueError):
        all_even_rule(Variant.A, Position((2,)))


@pytest.mark.parametrize('variant, piles, expected', [
    (Variant.B, (1, 2), N),
    (Variant.B, (1, 3, 5), N),
    (Variant.B, (1, 1, 2), NOT_APPLICABLE),
    (Variant.C, (1, 1, 2), N),
    (Variant.C, (3, 4, 4), N),
    (Variant.C, (1, 1, 1), NOT_APPLICABLE),
    (Variant.C, (2, 2), NOT_APPLICABLE),
])
def test_odd_count_rule(variant, piles, expected):
    assert odd_count_rule(variant, Position(piles)) == expected


@pytest.mark.parametrize('variant', [Variant.B, Variant.C])
def test_parity_rules_agree_with_oracle(variant):
    memo = MemoTable()
    for k in range(1, 5):
        for p in PileCountRegion(k, 6).positions():
            result = outcome(variant, p, memo)
            for rule in (all_even_rule, odd_count_rule):
                verdict = rule(variant, p)
                assert not verdict.applicable or verdict.outcome is result, (rule, p)


def test_registry_covers_every_id():
    assert set(CLASSIFIERS) == set(ClassifierId)
    assert set(REDUCTIONS) == {'b_strip_ones', 'b_strip_twos'}
    assert CLASSIFIERS[ClassifierId.CONJECTURE_B_PARITY].conjecture
    assert not CLASSIFIERS[ClassifierId.B_K_PILES].conjecture


def test_unknown_ids():
    with pytest.raises(UnknownClassifierError) as error:
        classifier_id('b_nine_piles')
    assert isinstance(error.value, KeyError)
    assert 'b_nine_piles' in str(error.value)
    with pytest.raises(UnknownClassifierError):
        get_reduction('b_strip_threes')
    assert classifier_id(' c_345 ') is ClassifierId.C_345


def test_classifier_rejects_other_variants():
    with pytest.raises(ValueError):
        get_classifier('b_k_piles')(Variant.C, Position((1, 2, 3)))
    assert get_classifier('classic_two_pile')('A', Position((2, 2))) == P


def test_classify_lists_applicable_verdicts():
    verdicts = classify(Position((3, 1, 1)), Variant.C)
    assert verdicts == [(ClassifierId.C_345, Variant.C, P),
                        (ClassifierId.C_BOUNDED3, Variant.C, P),
                        (ClassifierId.C_ONES_BIG, Variant.C, P)]


def test_classify_over_all_variants():
    verdicts = classify(Position((2, 4)))
    ids = {(c, v) for c, v, _ in verdicts}
    assert (ClassifierId.CLASSIC_TWO_PILE, Variant.A) in ids
    assert (ClassifierId.VERSION_A_RULE, Variant.A) in ids
    assert (ClassifierId.B_K_PILES, Variant.B) not in ids
    assert all(verdict == P for _, _, verdict in verdicts)


@pytest.mark.parametrize('variant', list(Variant))
def test_applicable_verdicts_agree(variant):
    # six piles reach the six-pile families of Version C
    for k in range(7 if variant is Variant.C else 6):
        for p in PileCountRegion(k, 6).positions():
            proven, claimed = set(), set()
            for cid, _, verdict in classify(p, variant):
                c = CLASSIFIERS[cid]
                if not c.conjecture:
                    proven.add(verdict.outcome)
                elif not c.is_known_counterexample(p):
                    claimed.add(verdict.outcome)
            assert len(proven) <= 1, p
            assert not proven or claimed <= proven, p


def test_known_counterexample_is_the_only_disagreement():
    p = Position((1, 1, 2, 2))
    verdicts = {cid: verdict.outcome for cid, _, verdict in classify(p, Variant.C)}
    assert verdicts[ClassifierId.CONJECTURE_C_MOD3] is Outcome.P
    assert verdicts[ClassifierId.C_BOUNDED3] is Outcome.N
    assert CLASSIFIERS[ClassifierId.CONJECTURE_C_MOD3].is_known_counterexample(p)
    assert not CLASSIFIERS[ClassifierId.C_BOUNDED3].is_known_counterexample(p)
