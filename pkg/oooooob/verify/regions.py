'''
This file contains the bounded regions that sweeps enumerate.

Every region yields its positions exactly once, ordered by pile count and then
lexicographically by the sorted piles.
'''

from dataclasses import dataclass
from itertools import combinations_with_replacement, product
from math import comb
from typing import Dict, Iterator, Sequence, Tuple, Union

from oooooob.models.position import Position, SizeCounts, from_counts

Bound = Union[int, Tuple[int, int]]


def _order(position: Position):
    return len(position), tuple(position)


@dataclass(frozen=True)
class PileCountRegion:
    '''All positions with exactly k piles, each of size min_size..max_size.'''
    k: int
    max_size: int
    min_size: int = 1

    def __post_init__(self):
        if self.k < 0 or self.max_size < 0:
            raise ValueError(f'Region bounds must be nonnegative: {self}')
        if self.min_size < 1:
            raise ValueError(f'min_size must be at least 1: {self}')

    def positions(self) -> Iterator[Position]:
        sizes = range(self.min_size, self.max_size + 1)
        for piles in combinations_with_replacement(sizes, self.k):
            yield Position.trusted(piles)

    def __len__(self) -> int:
        width = self.max_size - self.min_size + 1
        if width <= 0:
            return 1 if self.k == 0 else 0
        return comb(width + self.k - 1, self.k)

    def describe(self) -> Dict:
        return {'kind': 'pile_count', 'k': self.k, 'max_size': self.max_size,
                'min_size': self.min_size}

    def __str__(self):
        text = f'pile-count:{self.k}:{self.max_size}'
        return text if self.min_size == 1 else f'{text}:{self.min_size}'


@dataclass(frozen=True)
class CountsRegion:
    '''All positions with a_i piles of size i, low_i <= a_i <= high_i.'''
    bounds: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        bounds = []
        for bound in self.bounds:
            low, high = (0, bound) if isinstance(bound, int) else tuple(bound)
            if low < 0 or high < low:
                raise ValueError(f'Bad count bound {bound!r}')
            bounds.append((int(low), int(high)))
        object.__setattr__(self, 'bounds', tuple(bounds))

    @classmethod
    def of(cls, bounds: Sequence[Bound]) -> 'CountsRegion':
        return cls(tuple(bounds))

    @property
    def n(self) -> int:
        return len(self.bounds)

    def counts(self) -> Iterator[SizeCounts]:
        for values in product(*(range(low, high + 1) for low, high in self.bounds)):
            yield SizeCounts(values)

    def positions(self) -> Iterator[Position]:
        return iter(sorted((from_counts(c) for c in self.counts()), key=_order))

    def __len__(self) -> int:
        size = 1
        for low, high in self.bounds:
            size *= high - low + 1
        return size

    def describe(self) -> Dict:
        return {'kind': 'counts',
                'bounds': [high if low == 0 else [low, high] for low, high in self.bounds]}

    def __str__(self):
        return 'counts:' + ','.join(str(high) if low == 0 else f'{low}-{high}'
                                    for low, high in self.bounds)


@dataclass(frozen=True)
class OnesBigRegion:
    '''k piles of size 1 plus one pile of size n, for k <= max_k and n <= max_n.'''
    max_k: int
    max_n: int

    def __post_init__(self):
        if self.max_k < 0 or self.max_n < 0:
            raise ValueError(f'Region bounds must be nonnegative: {self}')

    def points(self) -> Iterator[Tuple[int, int]]:
        for n in range(self.max_n + 1):
            for k in range(self.max_k + 1):
                yield k, n

    def positions(self) -> Iterator[Position]:
        distinct = {Position((1,) * k + (n,)) for k, n in self.points()}
        return iter(sorted(distinct, key=_order))

    def describe(self) -> Dict:
        return {'kind': 'ones_big', 'max_k': self.max_k, 'max_n': self.max_n}

    def __str__(self):
        return f'ones-big:{self.max_k}:{self.max_n}'


Region = Union[PileCountRegion, CountsRegion, OnesBigRegion]


def enumerate_region(region: Region) -> Iterator[Position]:
    return region.positions()


def _bound(value) -> Bound:
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f'A count bound is an int or a [low, high] pair, got {value!r}')
        return int(value[0]), int(value[1])
    return int(value)


def region_from_dict(descriptor: Dict) -> Region:
    '''Builds a region from its descriptor, as found in profiles and reports.'''
    kind = descriptor.get('kind')
    if kind == 'pile_count':
        return PileCountRegion(int(descriptor['k']), int(descriptor['max_size']),
                               int(descriptor.get('min_size', 1)))
    if kind == 'counts':
        return CountsRegion.of([_bound(b) for b in descriptor['bounds']])
    if kind == 'ones_big':
        return OnesBigRegion(int(descriptor['max_k']), int(descriptor['max_n']))
    raise ValueError(f'Unknown region kind {kind!r}')


def parse_region(text: str) -> Region:
    '''
    Parses the command-line syntax: pile-count:K:MAX[:MIN], counts:B1,B2,... (each
    bound H or L-H) and ones-big:MAX_K:MAX_N.
    '''
    kind, _, rest = text.strip().partition(':')
    fields = rest.split(':') if rest else []
    try:
        if kind == 'pile-count' and len(fields) in (2, 3):
            return PileCountRegion(*(int(f) for f in fields))
        if kind == 'counts' and len(fields) == 1:
            bounds = []
            for field in fields[0].split(','):
                low, sep, high = field.strip().partition('-')
                bounds.append((int(low), int(high)) if sep else int(low))
            return CountsRegion.of(bounds)
        if kind == 'ones-big' and len(fields) == 2:
            return OnesBigRegion(int(fields[0]), int(fields[1]))
    except ValueError as e:
        raise ValueError(f'Bad region {text!r}: {e}') from None
    raise ValueError(f'Bad region {text!r}, expected pile-count:K:MAX[:MIN], '
                     f'counts:B1,B2,... or ones-big:MAX_K:MAX_N')
