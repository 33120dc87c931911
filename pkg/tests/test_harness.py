import pytest

from oooooob.classifiers import Classifier, ClassifierId, UnknownClassifierError
from oooooob.classifiers.common import applicable
from oooooob.classifiers.version_c import mod3_counterexample
from oooooob.models.memo import BudgetExceededError
from oooooob.models.position import Outcome, Variant
from oooooob.models.solver import outcome
from oooooob.verify import harness
from oooooob.verify.harness import (CONJECTURES, check_classifier, check_ones_big,
                                    check_parity_function, check_reduction,
                                    check_sum_counterexample, check_table_notation,
                                    lemma_ids, profile_checks, run_conjectures, run_profile,
                                    validate_profile)
from oooooob.verify.regions import CountsRegion, PileCountRegion
from oooooob.verify.reports import Status, format_reports

SMALL_PROFILE = {
    'mismatch_cap': 5,
    'sweeps': {
        'c_345': [{'variant': 'C', 'region': {'kind': 'pile_count', 'k': 3, 'max_size': 5}}],
        'b_strip_ones': [{'variant': 'B', 'region': {'kind': 'pile_count', 'k': 2, 'max_size': 4}}],
        'c_ones_big': [{'variant': 'C', 'region': {'kind': 'ones_big', 'max_k': 6, 'max_n': 4}}],
        'conjecture_b_parity': [{'variant': 'B', 'region': {'kind': 'pile_count', 'k': 3,
                                                            'max_size': 6, 'min_size': 2}}],
    },
    'parity_function': [{'region': {'kind': 'counts', 'bounds': [3, 3, [2, 4]]}}],
    'conjecture_c_mod3': [{'region': {'kind': 'counts', 'bounds': [[2, 4], [2, 3]]}}],
}


def test_check_classifier_passes():
    region = PileCountRegion(3, 6)
    report = check_classifier('b_k_piles', 'B', region)
    assert report.status is Status.PASS
    assert report.states_checked == len(region)
    assert 0 < report.applicable <= report.states_checked
    assert report.region == region.describe()


def test_check_classifier_rejects_other_variants():
    with pytest.raises(ValueError):
        check_classifier('b_k_piles', 'C', PileCountRegion(3, 4))
    with pytest.raises(UnknownClassifierError):
        check_classifier('b_nine_piles', 'B', PileCountRegion(3, 4))


def test_check_classifier_reports_mismatches(monkeypatch):
    always_p = Classifier(ClassifierId.B_K_PILES, lambda v, p: applicable(Outcome.P),
                          frozenset({Variant.B}))
    monkeypatch.setattr(harness, 'get_classifier', lambda _: always_p)
    region = PileCountRegion(2, 4)
    report = check_classifier('b_k_piles', 'B', region, mismatch_cap=2)
    wrong = [p for p in region.positions() if outcome(Variant.B, p) is Outcome.N]
    assert report.status is Status.FAIL
    assert report.mismatch_count == len(wrong)
    assert len(report.mismatches) == min(2, len(wrong))
    assert all(m.claimed == 'P' and m.oracle == 'N' for m in report.mismatches)


def test_workers_do_not_change_the_report():
    region = PileCountRegion(3, 6)
    single = check_classifier('c_345', 'C', region, workers=1)
    pooled = check_classifier('c_345', 'C', region, workers=2)
    assert pooled.to_dict() == single.to_dict()


def test_region_over_budget():
    with pytest.raises(BudgetExceededError):
        check_classifier('c_345', 'C', PileCountRegion(3, 6), max_states=3)


def test_check_reduction():
    ones = check_reduction('b_strip_ones', PileCountRegion(3, 5))
    assert ones.status is Status.PASS
    assert ones.applicable == ones.states_checked
    twos = check_reduction('b_strip_twos', PileCountRegion(3, 5))
    assert twos.status is Status.PASS
    # 1,1,1 has no pile of size 2 or more
    assert twos.applicable == twos.states_checked - 1
    report = check_reduction('b_strip_twos', PileCountRegion(1, 1))
    assert report.states_checked == 1 and report.applicable == 0


def test_check_parity_function():
    region = CountsRegion.of([3, 3, (0, 4)])
    report = check_parity_function(3, region)
    assert report.status is Status.PASS
    assert report.states_checked == len(region)
    # a_3 >= 2
    assert report.applicable == 4 * 4 * 3
    with pytest.raises(ValueError):
        check_parity_function(2, CountsRegion.of([3, 3]))
    with pytest.raises(ValueError):
        check_parity_function(4, region)


def test_check_ones_big():
    report = check_ones_big(8, 5)
    assert report.status is Status.PASS
    assert report.states_checked == 9 * 6


def test_check_table_notation_is_advisory():
    report = check_table_notation(4)
    assert report.advisory
    assert report.states_checked == 375
    assert report.status in (Status.PASS, Status.PARTIAL)


def test_sum_counterexample():
    report = check_sum_counterexample()
    assert report.status is Status.PASS
    assert len(report.assertions) == 4
    assert all(a['ok'] for a in report.assertions)


def test_lemma_ids():
    ids = lemma_ids()
    assert 'b_k_piles' in ids and 'b_strip_twos' in ids
    assert set(CONJECTURES) <= set(ids)
    assert len(ids) == len(set(ids))


def test_profile_checks():
    assert profile_checks(SMALL_PROFILE, 'sum_counterexample') == [{}]
    assert profile_checks(SMALL_PROFILE, 'table_notation') == [{'n': 4}, {'n': 5}]
    assert profile_checks(SMALL_PROFILE, 'conjecture_c_mod3')[0]['variant'] == 'C'
    with pytest.raises(UnknownClassifierError):
        profile_checks(SMALL_PROFILE, 'b_nine_piles')
    with pytest.raises(UnknownClassifierError):
        profile_checks(SMALL_PROFILE, 'c_bounded3')


def test_run_profile():
    reports = run_profile('c_345', SMALL_PROFILE)
    assert [r.status for r in reports] == [Status.PASS]
    assert reports[0].mismatch_cap == 5
    assert run_profile('b_strip_ones', SMALL_PROFILE)[0].status is Status.PASS
    ones_big = run_profile('c_ones_big', SMALL_PROFILE)[0]
    assert ones_big.states_checked == 7 * 5


def test_run_conjectures():
    reports = run_conjectures(SMALL_PROFILE)
    assert [r.classifier for r in reports] == list(CONJECTURES)
    assert [r.status for r in reports] == [Status.PASS, Status.PASS, Status.PARTIAL]
    mod3 = reports[-1]
    assert mod3.mismatch_count == 0
    assert [str(m.position) for m in mod3.known_counterexamples] == ['1,1,2,2']


def test_known_counterexamples_do_not_hide_other_mismatches(monkeypatch):
    always_p = Classifier(ClassifierId.CONJECTURE_C_MOD3, lambda v, p: applicable(Outcome.P),
                          frozenset({Variant.C}), conjecture=True,
                          known_counterexample=mod3_counterexample)
    monkeypatch.setattr(harness, 'get_classifier', lambda _: always_p)
    report = check_classifier('conjecture_c_mod3', 'C', CountsRegion.of([(2, 3), (2, 3)]))
    assert [str(m.position) for m in report.known_counterexamples] == ['1,1,2,2']
    assert report.mismatch_count > 0
    assert report.status is Status.FAIL


@pytest.mark.parametrize('fmt', ['text', 'json', 'csv'])
def test_reports_serialize_identically_across_runs(fmt):
    def run():
        return [check_classifier('c_345', 'C', PileCountRegion(3, 5)),
                check_classifier('conjecture_c_mod3', 'C', CountsRegion.of([(2, 5), (2, 5)])),
                check_sum_counterexample()]

    assert format_reports(run(), fmt) == format_reports(run(), fmt)


def test_mod3_known_counterexamples_over_two_sizes():
    report = check_classifier('conjecture_c_mod3', 'C', CountsRegion.of([(2, 5), (2, 5)]))
    assert report.mismatch_count == 0
    assert report.status is Status.PARTIAL
    assert [str(m.position) for m in report.known_counterexamples] == \
        ['1,1,2,2', '1,1,2,2,2,2,2']


def test_sweep_passes_on_sub_regions():
    whole = PileCountRegion(3, 6)
    assert check_classifier('b_k_piles', 'B', whole).status is Status.PASS
    for region in (PileCountRegion(3, 4), PileCountRegion(3, 6, 2), PileCountRegion(3, 5, 3)):
        assert set(region.positions()) <= set(whole.positions())
        report = check_classifier('b_k_piles', 'B', region)
        assert report.status is Status.PASS
        assert report.applicable <= report.states_checked


def test_validate_profile():
    for lemma_id in ('c_345', 'b_strip_ones', 'c_ones_big', 'sum_counterexample') + CONJECTURES:
        validate_profile(SMALL_PROFILE, lemma_id)
    bad = {'sweeps': {'c_345': [{'variant': 'A', 'region': {'kind': 'pile_count', 'k': 3,
                                                             'max_size': 5}}]},
           'parity_function': [{'region': {'kind': 'counts', 'bounds': [3, 3]}}]}
    with pytest.raises(ValueError):
        validate_profile(bad, 'c_345')
    with pytest.raises(ValueError):
        validate_profile(bad, 'conjecture_b_parity_function')
    with pytest.raises(UnknownClassifierError):
        validate_profile(bad, 'b_k_piles')
