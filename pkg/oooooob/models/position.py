'''
This file contains the value types of the game: variants, outcomes, positions and
per-size pile counts.
'''

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Tuple

import numpy as np


class Variant(Enum):
    '''
    The rule set in force.

    - A: remove one token from each pile of any nonempty set of piles
    - B: remove one token from any pile, or one token from every pile
    - C: remove one token from any pile, or one token from each of two piles
    '''
    A = 'A'
    B = 'B'
    C = 'C'

    @classmethod
    def parse(cls, text) -> 'Variant':
        if isinstance(text, Variant):
            return text
        try:
            return cls(str(text).strip().upper())
        except ValueError:
            raise ValueError(
                f'Unknown variant {text!r}, expected one of A, B, C') from None

    def __str__(self):
        return self.value


class Outcome(Enum):
    '''Normal-play outcome class: P (previous player wins) or N (next player wins).'''
    P = 'P'
    N = 'N'

    @classmethod
    def parse(cls, text) -> 'Outcome':
        if isinstance(text, Outcome):
            return text
        try:
            return cls(str(text).strip().upper())
        except ValueError:
            raise ValueError(f'Unknown outcome {text!r}') from None

    def __str__(self):
        return self.value


class Position(tuple):
    '''
    A multiset of positive pile sizes, stored as a nondecreasing tuple.

    Zero piles are dropped on construction, so every Position is canonical and two
    positions are equal exactly when they hold the same piles. The empty position is
    the terminal position of every variant.
    '''
    __slots__ = ()

    def __new__(cls, piles: Iterable[int] = ()):
        values = []
        for x in piles:
            if isinstance(x, bool) or not isinstance(x, (int, np.integer)):
                raise ValueError(f'Pile sizes must be integers, got {x!r}')
            x = int(x)
            if x < 0:
                raise ValueError(f'Pile sizes must be nonnegative, got {x}')
            if x:
                values.append(x)
        values.sort()
        return super().__new__(cls, values)

    @classmethod
    def trusted(cls, piles: Iterable[int]) -> 'Position':
        '''Wraps piles that are already positive and sorted, skipping validation.'''
        return tuple.__new__(cls, piles)

    @property
    def pile_count(self) -> int:
        return len(self)

    @property
    def total_tokens(self) -> int:
        return sum(self)

    @property
    def max_pile(self) -> int:
        return self[-1] if self else 0

    @property
    def distinct_sizes(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self)))

    def multiplicity(self, size: int) -> int:
        return self.count(size)

    def union(self, *piles: int) -> 'Position':
        '''The position with extra piles added (the multiset sum).'''
        return Position(tuple(self) + tuple(piles))

    def __str__(self):
        return ','.join(str(x) for x in self)

    def __repr__(self):
        return f'Position({tuple.__repr__(self)})'

    def __reduce__(self):
        return (Position.trusted, (tuple(self),))


@dataclass(frozen=True)
class SizeCounts:
    '''
    Pile counts by size: counts[i - 1] is a_i, the number of piles of size i.
    n = len(counts) is the largest pile size considered.
    '''
    counts: Tuple[int, ...]

    def __post_init__(self):
        counts = tuple(int(a) for a in self.counts)
        if any(a < 0 for a in counts):
            raise ValueError(f'Pile counts must be nonnegative, got {counts}')
        object.__setattr__(self, 'counts', counts)

    @property
    def n(self) -> int:
        return len(self.counts)

    def a(self, i: int) -> int:
        '''The 1-based count a_i; sizes beyond n have no piles.'''
        if i < 1:
            raise ValueError(f'Pile sizes start at 1, got {i}')
        return self.counts[i - 1] if i <= self.n else 0

    def trimmed(self) -> 'SizeCounts':
        '''Drops trailing zero counts so that n is the largest size present.'''
        counts = list(self.counts)
        while counts and counts[-1] == 0:
            counts.pop()
        return SizeCounts(tuple(counts))

    def padded(self, n: int) -> 'SizeCounts':
        if n < self.n:
            raise ValueError(f'Cannot pad {self} down to {n} size classes')
        return SizeCounts(self.counts + (0,) * (n - self.n))

    def parities(self, upto: int = None) -> Tuple[int, ...]:
        upto = self.n if upto is None else upto
        return tuple(self.a(i) % 2 for i in range(1, upto + 1))

    @property
    def pile_count(self) -> int:
        return sum(self.counts)

    @property
    def total_tokens(self) -> int:
        return sum(i * a for i, a in enumerate(self.counts, start=1))

    def __str__(self):
        return ','.join(str(a) for a in self.counts)


def canonicalize(raw: Iterable[int]) -> Position:
    '''Drops zero piles and sorts the rest in nondecreasing order.'''
    return Position(raw)


def to_counts(position: Position, n: int) -> SizeCounts:
    '''Counts the piles of each size 1..n. Raises ValueError if a pile exceeds n.'''
    position = Position(position)
    if n < 1:
        raise ValueError(f'n must be positive, got {n}')
    if position.max_pile > n:
        raise ValueError(
            f'Position {position} has a pile of size {position.max_pile} > {n}')
    histogram = np.bincount(np.asarray(position, dtype=np.int64), minlength=n + 1)
    return SizeCounts(tuple(int(a) for a in histogram[1:]))


def from_counts(counts: SizeCounts) -> Position:
    piles = []
    for size, a in enumerate(counts.counts, start=1):
        piles.extend([size] * a)
    return Position.trusted(piles)


def parity_census(position: Position) -> Tuple[int, int]:
    '''Returns (even_count, odd_count) of the piles.'''
    odd = sum(1 for x in position if x % 2)
    return len(position) - odd, odd


def group_sizes(position: Position) -> Tuple[Tuple[int, int], ...]:
    '''Distinct sizes with their multiplicities, smallest size first.'''
    return tuple(sorted(Counter(position).items()))
