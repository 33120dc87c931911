'''
This file contains the Version B rules: the two outcome-preserving reductions, the
k-pile lemmas, the parity conjecture for many large piles and the bounded-size rules.
'''

from functools import lru_cache
from typing import Dict, Tuple

from oooooob.classifiers.base_tables import base_case_table, bounded_size_rule
from oooooob.classifiers.common import (NOT_APPLICABLE, Applicability, applicable,
                                        decide)
from oooooob.models.pattern import (CountPattern, ParityPattern, parse_count_pattern,
                                    parse_pattern)
from oooooob.models.position import Outcome, Position, SizeCounts, parity_census
from oooooob.utilities.loaders import load_rule_book

Family = Tuple[ParityPattern, Tuple[ParityPattern, ...]]


def b_strip_ones(p: Position) -> Position:
    '''Removes pairs of 1s while something else remains: 1,1,G has the class of G.'''
    piles = list(p)
    while len(piles) > 2 and piles[:2] == [1, 1]:
        piles = piles[2:]
    return Position.trusted(piles)


def b_strip_twos(p: Position) -> Position:
    '''Removes pairs of 2s while a pile of size at least 2 remains.'''
    piles = list(p)
    while True:
        if piles.count(2) < 2:
            break
        i = piles.index(2)
        rest = piles[:i] + piles[i + 2:]
        if not rest or rest[-1] < 2:
            break
        piles = rest
    return Position.trusted(piles)


@lru_cache(maxsize=None)
def pile_families() -> Dict[int, Tuple[Family, ...]]:
    book = load_rule_book('version_b_piles')
    families = {}
    for k, entries in book.items():
        families[int(k)] = tuple(
            (parse_pattern(str(entry['pattern'])),
             tuple(parse_pattern(str(e)) for e in entry.get('except', ())))
            for entry in entries)
    return families


def b_k_piles(p: Position) -> Applicability:
    families = pile_families().get(len(p))
    if families is None:
        return NOT_APPLICABLE
    for pattern, exceptions in families:
        if pattern.matches(p) and not any(e.matches(p) for e in exceptions):
            return applicable(Outcome.P)
    return applicable(Outcome.N)


def conjecture_b_parity(p: Position) -> Applicability:
    '''
    k >= 3 piles, each larger than ceil(k/3): the outcome depends only on the number
    of odd piles.
    '''
    k = len(p)
    if k < 3 or p[0] <= -(-k // 3):
        return NOT_APPLICABLE
    _, odd = parity_census(p)
    if k % 2 == 1:
        return decide(odd % 2 == 0)
    # the even run stops just below k/2, the odd run starts just above it
    low_end = k // 2 - 2 if k % 4 == 0 else k // 2 - 1
    if odd % 2 == 0:
        return decide(odd <= low_end)
    return decide(odd >= low_end + 3)


def conjecture_b_parity_function_hypothesis(n: int, c: SizeCounts) -> bool:
    return n >= 3 and c.a(n) >= 2 * n - 4


@lru_cache(maxsize=None)
def max_3_patterns() -> Tuple[CountPattern, ...]:
    entry = load_rule_book('bounded_size_rules')['max_3']
    return tuple(parse_count_pattern(t) for t in entry['p_positions'])


def max_6_threshold() -> int:
    return int(load_rule_book('bounded_size_rules')['max_6']['min_top_count'])


def b_bounded_size(c: SizeCounts) -> Applicability:
    counts = c.trimmed()
    n = counts.n
    if n == 0:
        return applicable(Outcome.P)
    if n <= 3:
        return decide(any(pattern.matches(counts) for pattern in max_3_patterns()))
    if n in (4, 5):
        rule = bounded_size_rule(n)
        if rule.in_base_region(counts):
            return applicable(base_case_table(n).lookup(counts))
        return decide(rule.matches_general(counts))
    if n == 6 and counts.a(6) >= max_6_threshold():
        odd_35 = (counts.a(5) + counts.a(3)) % 2
        a1, a2 = counts.a(1) % 2, counts.a(2) % 2
        return decide((odd_35 == 0 and a1 == 0) or (odd_35 == 1 and a2 == 1 and a1 == 1))
    return NOT_APPLICABLE
