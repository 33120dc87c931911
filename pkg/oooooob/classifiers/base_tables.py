'''
This file contains the base-case tables of the Version B bounded-size rules.

For a largest pile of 4 (or 5) the P-positions with few piles of the largest size
follow no short parity rule. Within that base region the outcome depends on each
smaller count only through a capped parity representative, so the region is covered
by a finite table: every representative with its oracle outcome.

Table file format (one file per n, oooooob/data/base_cases_max{n}.txt):

    # oooooob base-case table, format 1
    # variant: B
    # n: 4
    # cap: 3
    # top_counts: 1-3
    B 4 0,0,0,1 P
    B 4 0,0,0,2 P
    ...

Lines are in lexicographic order of the counts. When a table file is missing the
representatives are solved on demand with the same result.
'''

import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Optional, Tuple

from oooooob.models.memo import MemoTable
from oooooob.models.pattern import CountPattern, parse_count_pattern
from oooooob.models.position import Outcome, SizeCounts, Variant, from_counts
from oooooob.models.solver import outcome
from oooooob.utilities.loaders import load_rule_book, packaged_file

logger = logging.getLogger(__name__)

FORMAT_VERSION = 1
TABLE_SIZES = (4, 5)


@dataclass(frozen=True)
class BoundedSizeRule:
    '''The rule-book entry for Version B positions whose largest pile is exactly n.'''
    n: int
    cap: int
    top_low: int
    top_high: int
    base_cases: Tuple[CountPattern, ...]
    general_cases: Tuple[CountPattern, ...]

    def in_base_region(self, counts: SizeCounts) -> bool:
        return self.top_low <= counts.a(self.n) <= self.top_high

    def representative(self, counts: SizeCounts) -> SizeCounts:
        '''Caps every count below size n, keeping its parity.'''
        lower = tuple(v if v < self.cap else self.cap + (v - self.cap) % 2
                      for v in counts.padded(self.n).counts[:-1])
        return SizeCounts(lower + (counts.a(self.n),))

    def representatives(self) -> Iterator[SizeCounts]:
        ranges = [range(self.cap + 2)] * (self.n - 1) + \
            [range(self.top_low, self.top_high + 1)]
        for counts in product(*ranges):
            yield SizeCounts(counts)

    def matches_general(self, counts: SizeCounts) -> bool:
        return any(pattern.matches(counts) for pattern in self.general_cases)

    def notation_outcome(self, counts: SizeCounts) -> Outcome:
        '''The outcome the printed base-case and general-case lists give.'''
        listed = self.base_cases + self.general_cases
        return Outcome.P if any(p.matches(counts) for p in listed) else Outcome.N


@lru_cache(maxsize=None)
def bounded_size_rule(n: int) -> BoundedSizeRule:
    if n not in TABLE_SIZES:
        raise ValueError(f'No base-case table for largest pile {n}, '
                         f'expected one of {TABLE_SIZES}')
    entry = load_rule_book('bounded_size_rules')[f'max_{n}']
    low, high = entry['base_top_counts']
    return BoundedSizeRule(
        n=n, cap=int(entry['cap']), top_low=int(low), top_high=int(high),
        base_cases=tuple(parse_count_pattern(t) for t in entry['base_cases']),
        general_cases=tuple(parse_count_pattern(t) for t in entry['general_cases']))


def table_path(n: int) -> str:
    return packaged_file('data', f'base_cases_max{n}.txt')


def generate_table(n: int, memo: MemoTable = None) -> List[Tuple[SizeCounts, Outcome]]:
    '''Solves every representative of the base region with the Version B oracle.'''
    rule = bounded_size_rule(n)
    memo = MemoTable() if memo is None else memo
    reps = list(rule.representatives())
    for counts in sorted(reps, key=lambda c: c.total_tokens):
        outcome(Variant.B, from_counts(counts), memo)
    logger.info(f'Solved {len(reps)} base cases for n={n} ({len(memo)} states)')
    return [(counts, memo.get((Variant.B, from_counts(counts)))) for counts in reps]


def format_table(n: int, rows: List[Tuple[SizeCounts, Outcome]]) -> str:
    rule = bounded_size_rule(n)
    lines = [f'# oooooob base-case table, format {FORMAT_VERSION}',
             f'# variant: {Variant.B}',
             f'# n: {n}',
             f'# cap: {rule.cap}',
             f'# top_counts: {rule.top_low}-{rule.top_high}']
    for counts, result in sorted(rows, key=lambda row: row[0].counts):
        lines.append(f'{Variant.B} {n} {counts} {result}')
    return '\n'.join(lines) + '\n'


def write_table(n: int, path: Optional[str] = None, memo: MemoTable = None) -> str:
    path = table_path(n) if path is None else path
    with open(path, 'w', encoding='utf-8') as f:
        f.write(format_table(n, generate_table(n, memo)))
    logger.info(f'Wrote base-case table for n={n} to {path}')
    return path


def parse_table(text: str) -> Tuple[Dict[str, str], Dict[Tuple[int, ...], Outcome]]:
    '''Returns the header fields and the entries of a table file.'''
    header, entries = {}, {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        if line.startswith('#'):
            key, sep, value = line[1:].partition(':')
            if sep:
                header[key.strip()] = value.strip()
            continue
        fields = line.split()
        if len(fields) != 4:
            raise ValueError(f'Line {number}: expected "variant n counts outcome"')
        variant, n, counts, result = fields
        if Variant.parse(variant) is not Variant.B:
            raise ValueError(f'Line {number}: base-case tables are for Version B')
        key = tuple(int(a) for a in counts.split(','))
        if len(key) != int(n):
            raise ValueError(f'Line {number}: {len(key)} counts for n={n}')
        entries[key] = Outcome.parse(result)
    return header, entries


class BaseCaseTable():
    '''
    Outcomes of the base region for one n, read from the shipped table or, when it is
    absent, solved on demand.
    '''

    def __init__(self, n: int, entries: Optional[Dict[Tuple[int, ...], Outcome]] = None):
        self.rule = bounded_size_rule(n)
        self.n = n
        self.entries = entries
        self._memo = MemoTable()

    @classmethod
    def load(cls, n: int, path: Optional[str] = None) -> 'BaseCaseTable':
        path = table_path(n) if path is None else path
        if not os.path.exists(path):
            logger.warning(f'Base-case table {path} not found, '
                           f'solving base cases for n={n} on demand')
            return cls(n)
        with open(path, 'r', encoding='utf-8') as f:
            header, entries = parse_table(f.read())
        if int(header.get('n', n)) != n:
            raise ValueError(f'{path} holds the table for n={header["n"]}, not {n}')
        return cls(n, entries)

    @property
    def shipped(self) -> bool:
        return self.entries is not None

    def lookup(self, counts: SizeCounts) -> Outcome:
        if not self.rule.in_base_region(counts):
            raise ValueError(f'{counts} is outside the base region for n={self.n}')
        rep = self.rule.representative(counts)
        if self.entries is not None:
            try:
                return self.entries[rep.counts]
            except KeyError:
                raise ValueError(f'Base-case table for n={self.n} lacks {rep}') from None
        return outcome(Variant.B, from_counts(rep), self._memo)


@lru_cache(maxsize=None)
def base_case_table(n: int) -> BaseCaseTable:
    return BaseCaseTable.load(n)
