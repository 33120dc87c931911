'''
This file contains the sweeps that compare the closed-form rules with the search oracle.

Each check enumerates a region, solves every position exactly and records where a
rule disagrees. Large sweeps can be split over worker processes, each with its own
memo table; the partial reports are merged deterministically.
'''

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, List, Optional, Sequence

from oooooob.classifiers import (REDUCTIONS, ClassifierId, UnknownClassifierError,
                                 get_classifier, get_reduction)
from oooooob.classifiers.base_tables import TABLE_SIZES, base_case_table, bounded_size_rule
from oooooob.classifiers.version_b import conjecture_b_parity_function_hypothesis
from oooooob.classifiers.version_c import c_345, c_ones_big, ones_big_position
from oooooob.models.game_sum import outcome_sum, p_options_sum, sum_position
from oooooob.models.memo import BudgetExceededError, MemoTable
from oooooob.models.position import Outcome, Position, Variant, from_counts, to_counts
from oooooob.models.solver import outcome
from oooooob.models.vector_game import ONES_BIG_GAME, outcome_vector
from oooooob.verify.regions import CountsRegion, OnesBigRegion, Region, region_from_dict
from oooooob.verify.reports import DEFAULT_MISMATCH_CAP, VerificationReport, merge_reports

logger = logging.getLogger(__name__)

PARITY_FUNCTION = 'conjecture_b_parity_function'
SUM_COUNTEREXAMPLE = 'sum_counterexample'
TABLE_NOTATION = 'table_notation'
CONJECTURES = (ClassifierId.CONJECTURE_B_PARITY.value, PARITY_FUNCTION,
               ClassifierId.CONJECTURE_C_MOD3.value)

# the pair of piles each reduction strips, and the hypothesis on the rest
_PADDING = {'b_strip_ones': (1, 1), 'b_strip_twos': (2, 2)}


def _token_order(position: Position):
    return position.total_tokens, tuple(position)


def _check_budget(count: int, max_states: Optional[int]) -> None:
    if max_states is not None and count > max_states:
        logger.warning(f'Region of {count} positions exceeds the budget of {max_states}')
        raise BudgetExceededError(max_states)


def _classifier_chunk(classifier_id: ClassifierId, variant: Variant, region: Dict,
                      positions: Sequence[Position],
                      max_states: Optional[int]) -> VerificationReport:
    classifier = get_classifier(classifier_id)
    memo = MemoTable(max_states)
    report = VerificationReport(str(classifier_id), str(variant), region, mismatch_cap=None)
    for position in sorted(positions, key=_token_order):
        oracle = outcome(variant, position, memo)
        report.states_checked += 1
        verdict = classifier(variant, position)
        if verdict.applicable:
            report.applicable += 1
            if verdict.outcome is not oracle:
                report.add_mismatch(position, verdict.outcome, oracle,
                                    known=classifier.is_known_counterexample(position))
    return report


def check_classifier(classifier_id, variant, region: Region,
                     max_states: Optional[int] = None,
                     mismatch_cap: Optional[int] = DEFAULT_MISMATCH_CAP,
                     workers: int = 1) -> VerificationReport:
    '''
    Compares a classifier with the oracle on every position of region where the
    classifier applies.
    '''
    classifier = get_classifier(classifier_id)
    variant = Variant.parse(variant)
    if variant not in classifier.variants:
        raise ValueError(f'{classifier.id} is not stated for Version {variant}')
    positions = sorted(region.positions(), key=_token_order)
    _check_budget(len(positions), max_states)
    logger.info(f'Checking {classifier.id} under Version {variant} on {region} '
                f'({len(positions)} positions, {workers} workers)')

    workers = max(1, min(workers, len(positions)))
    if workers == 1:
        parts = [_classifier_chunk(classifier.id, variant, region.describe(),
                                   positions, max_states)]
    else:
        chunks = [positions[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_classifier_chunk,
                                  [classifier.id] * workers, [variant] * workers,
                                  [region.describe()] * workers, chunks,
                                  [max_states] * workers))
    report = merge_reports(parts, mismatch_cap)
    logger.info(f'{classifier.id}: {report.status} ({report.mismatch_count} mismatches)')
    return report


def check_parity_function(n: int, region: CountsRegion,
                          max_states: Optional[int] = None,
                          mismatch_cap: Optional[int] = DEFAULT_MISMATCH_CAP,
                          memo: MemoTable = None) -> VerificationReport:
    '''
    Groups the Version B positions of region with a_n >= 2n - 4 by the parities of
    a_1..a_{n-1}; a group holding both outcomes refutes the conjecture.
    '''
    if n < 3:
        raise ValueError(f'The parity-function conjecture needs n >= 3, got {n}')
    if not isinstance(region, CountsRegion) or region.n != n:
        raise ValueError(f'Expected counts bounds for n={n}, got {region}')
    positions = list(region.positions())
    _check_budget(len(positions), max_states)
    memo = MemoTable(max_states) if memo is None else memo
    report = VerificationReport(PARITY_FUNCTION, str(Variant.B), region.describe(),
                                mismatch_cap=mismatch_cap)

    in_hypothesis = []
    for position in positions:
        counts = to_counts(position, n)
        if conjecture_b_parity_function_hypothesis(n, counts):
            in_hypothesis.append((position, counts.parities(n - 1)))
    for position, _ in sorted(in_hypothesis, key=lambda item: _token_order(item[0])):
        outcome(Variant.B, position, memo)

    groups = {}
    for position, parities in in_hypothesis:
        result = memo.get((Variant.B, position))
        first, first_result = groups.setdefault(parities, (position, result))
        if result is not first_result:
            report.add_mismatch(position, first_result, result, witness=first)
    report.states_checked = len(positions)
    report.applicable = len(in_hypothesis)
    logger.info(f'Parity function n={n}: {len(groups)} parity classes, {report.status}')
    return report


def check_reduction(reduction_id: str, region: Region,
                    max_states: Optional[int] = None,
                    mismatch_cap: Optional[int] = DEFAULT_MISMATCH_CAP,
                    memo: MemoTable = None) -> VerificationReport:
    '''
    For every G of region satisfying the reduction's hypothesis, builds H = 1,1,G (or
    2,2,G) and checks that H, G and the stripped H share one Version B outcome.
    '''
    strip = get_reduction(reduction_id)
    padding = _PADDING[reduction_id]
    positions = sorted(region.positions(), key=_token_order)
    _check_budget(len(positions), max_states)
    memo = MemoTable(max_states) if memo is None else memo
    report = VerificationReport(reduction_id, str(Variant.B), region.describe(),
                                mismatch_cap=mismatch_cap)
    for g in positions:
        report.states_checked += 1
        if not g or (padding == (2, 2) and g.max_pile < 2):
            continue
        report.applicable += 1
        h = g.union(*padding)
        expected = outcome(Variant.B, h, memo)
        for other in (g, strip(h)):
            claimed = outcome(Variant.B, other, memo)
            if claimed is not expected:
                report.add_mismatch(h, claimed, expected)
                break
    return report


def check_ones_big(max_k: int, max_n: int,
                   max_states: Optional[int] = None,
                   mismatch_cap: Optional[int] = DEFAULT_MISMATCH_CAP) -> VerificationReport:
    '''
    Compares the closed form for k ones and one pile of size n with the Version C
    oracle and with the equivalent vector subtraction game.
    '''
    region = OnesBigRegion(max_k, max_n)
    memo, vector_memo = MemoTable(max_states), MemoTable(max_states)
    report = VerificationReport(ClassifierId.C_ONES_BIG.value, str(Variant.C),
                                region.describe(), mismatch_cap=mismatch_cap)
    for k, n in region.points():
        report.states_checked += 1
        report.applicable += 1
        claimed = c_ones_big(k, n)
        position = ones_big_position(k, n)
        oracle = outcome(Variant.C, position, memo)
        vector = outcome_vector(ONES_BIG_GAME, (k, n), vector_memo)
        if claimed is not oracle:
            report.add_mismatch(position, claimed, oracle)
        elif claimed is not vector:
            report.add_mismatch(position, claimed, f'{vector} (vector game at {k},{n})')
    return report


def check_table_notation(n: int) -> VerificationReport:
    '''
    Reads every base-case representative through the printed base-case notation and
    compares with the table. The table is authoritative, so disagreements only make
    the report PARTIAL.
    '''
    rule = bounded_size_rule(n)
    table = base_case_table(n)
    report = VerificationReport(f'{TABLE_NOTATION}_max{n}', str(Variant.B),
                                {'kind': 'base_cases', 'n': n, 'cap': rule.cap,
                                 'top_counts': [rule.top_low, rule.top_high]},
                                advisory=True)
    for counts in rule.representatives():
        report.states_checked += 1
        report.applicable += 1
        tabulated = table.lookup(counts)
        read = rule.notation_outcome(counts)
        if read is not tabulated:
            report.add_mismatch(from_counts(counts), read, tabulated)
    return report


def check_sum_counterexample() -> VerificationReport:
    '''
    Version C is not the "move in one or two components" sum of nim heaps: 1,1,3 is a
    Version C P-position while that sum on the heaps 3,1,1 has the P-option 1,1,1.
    '''
    report = VerificationReport(SUM_COUNTEREXAMPLE, str(Variant.C),
                                {'kind': 'sum', 'components': [3, 1, 1], 'arities': [1, 2]})
    report.add_assertion('Version C on 1,1,1 (oracle)', Outcome.P,
                         outcome(Variant.C, Position((1, 1, 1))))
    report.add_assertion('Version C on 1,1,3 (c_345)', Outcome.P,
                         c_345(Position((1, 1, 3))).outcome)
    heaps = sum_position((3, 1, 1), (1, 2))
    memo = MemoTable()
    found = any(t.components == (1, 1, 1) for t in p_options_sum(heaps, memo))
    report.add_assertion('nim sum 3,1,1 with arities {1,2}',
                         'N; 1,1,1 is a P-option',
                         f'{outcome_sum(heaps, memo)}; 1,1,1 is '
                         f'{"a" if found else "not a"} P-option')
    report.add_assertion('nim sum 1,1,1 with arities {1,2}', Outcome.P,
                         outcome_sum(sum_position((1, 1, 1), (1, 2)), memo))
    report.states_checked = report.applicable = len(report.assertions)
    return report


def lemma_ids() -> List[str]:
    return [c.value for c in ClassifierId] + list(REDUCTIONS) + \
        [PARITY_FUNCTION, SUM_COUNTEREXAMPLE, TABLE_NOTATION]


def default_workers() -> int:
    return os.cpu_count() or 1


def run_check(lemma_id: str, check: Dict, max_states: Optional[int] = None,
              mismatch_cap: Optional[int] = DEFAULT_MISMATCH_CAP,
              workers: int = 1) -> VerificationReport:
    '''Runs one entry of a profile's sweep list.'''
    if lemma_id == SUM_COUNTEREXAMPLE:
        return check_sum_counterexample()
    if lemma_id == TABLE_NOTATION:
        return check_table_notation(int(check['n']))
    region = region_from_dict(check['region'])
    if lemma_id == PARITY_FUNCTION:
        return check_parity_function(region.n, region, max_states, mismatch_cap)
    if lemma_id in REDUCTIONS:
        return check_reduction(lemma_id, region, max_states, mismatch_cap)
    if lemma_id == ClassifierId.C_ONES_BIG.value and isinstance(region, OnesBigRegion):
        return check_ones_big(region.max_k, region.max_n, max_states, mismatch_cap)
    return check_classifier(lemma_id, check['variant'], region, max_states,
                            mismatch_cap, workers)


def run_profile(lemma_id: str, profile: Dict, max_states: Optional[int] = None,
                workers: int = 1) -> List[VerificationReport]:
    '''Runs every sweep the profile lists for lemma_id.'''
    checks = profile_checks(profile, lemma_id)
    cap = profile.get('mismatch_cap', DEFAULT_MISMATCH_CAP)
    return [run_check(lemma_id, check, max_states, cap, workers) for check in checks]


def profile_checks(profile: Dict, lemma_id: str) -> List[Dict]:
    if lemma_id not in lemma_ids():
        raise UnknownClassifierError(
            f'Unknown lemma {lemma_id!r}, expected one of {", ".join(lemma_ids())}')
    if lemma_id == SUM_COUNTEREXAMPLE:
        return [{}]
    if lemma_id == PARITY_FUNCTION:
        return list(profile.get('parity_function', ()))
    if lemma_id == ClassifierId.CONJECTURE_C_MOD3.value:
        return [dict(check, variant='C') for check in profile.get('conjecture_c_mod3', ())]
    if lemma_id == TABLE_NOTATION:
        return [{'n': n} for n in TABLE_SIZES]
    checks = profile['sweeps'].get(lemma_id)
    if not checks:
        raise UnknownClassifierError(f'Profile has no sweeps for {lemma_id!r}')
    return list(checks)


def validate_profile(profile: Dict, lemma_id: str) -> None:
    '''Parses every check the profile lists for lemma_id without solving anything.'''
    classifiers = {c.value for c in ClassifierId}
    for check in profile_checks(profile, lemma_id):
        if lemma_id in (SUM_COUNTEREXAMPLE, TABLE_NOTATION):
            continue
        if 'region' not in check:
            raise ValueError(f'A {lemma_id} check has no region: {check}')
        region = region_from_dict(check['region'])
        if lemma_id == PARITY_FUNCTION:
            if not isinstance(region, CountsRegion) or region.n < 3:
                raise ValueError(f'{lemma_id} needs counts bounds with n >= 3, got {region}')
        elif lemma_id in classifiers and not (lemma_id == ClassifierId.C_ONES_BIG.value
                                              and isinstance(region, OnesBigRegion)):
            variant = Variant.parse(check.get('variant', ''))
            classifier = get_classifier(lemma_id)
            if variant not in classifier.variants:
                raise ValueError(f'{classifier.id} is not stated for Version {variant}')


def run_conjectures(profile: Dict, max_states: Optional[int] = None,
                    workers: int = 1) -> List[VerificationReport]:
    reports = []
    for lemma_id in CONJECTURES:
        reports.extend(run_profile(lemma_id, profile, max_states, workers))
    return reports
