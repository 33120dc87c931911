'''
This file contains nim sums with move arities: a move picks r nonempty components, r
one of the allowed arities, and lowers each of them to any smaller size.

With arities {1, 2} on three components this is the sum game that mimics Version C
(move in G, in H, or in both) and shows that Version C is not such a sum.
'''

from dataclasses import dataclass
from itertools import combinations, product
from typing import FrozenSet, Iterable, List, Tuple

from oooooob.models.memo import MemoTable
from oooooob.models.position import Outcome
from oooooob.models.solver import normal_play, search, settle_on_p


@dataclass(frozen=True)
class SumPosition:
    '''
    Nim components, sorted, and the allowed move arities. An emptied component stays in
    the sum, so every arity must fit the number of components.
    '''
    components: Tuple[int, ...]
    arities: FrozenSet[int]

    def __post_init__(self):
        components = []
        for c in self.components:
            if isinstance(c, bool) or int(c) != c or c < 0:
                raise ValueError(f'Components must be nonnegative integers, got {c!r}')
            components.append(int(c))
        arities = frozenset(int(r) for r in self.arities)
        if not arities or min(arities) < 1:
            raise ValueError(f'Arities must be a nonempty set of positive integers, '
                             f'got {sorted(arities)}')
        if max(arities) > len(components):
            raise ValueError(f'Arities {sorted(arities)} exceed the {len(components)} components')
        object.__setattr__(self, 'components', tuple(sorted(components)))
        object.__setattr__(self, 'arities', arities)

    def options(self) -> List['SumPosition']:
        result = set()
        nonempty = [i for i, c in enumerate(self.components) if c]
        for r in sorted(self.arities):
            for chosen in combinations(nonempty, r):
                lowered = product(*(range(self.components[i]) for i in chosen))
                for values in lowered:
                    piles = list(self.components)
                    for i, v in zip(chosen, values):
                        piles[i] = v
                    result.add(tuple(sorted(piles)))
        return [SumPosition(c, self.arities) for c in sorted(result)]

    def __str__(self):
        return ','.join(str(c) for c in self.components)


def sum_position(components: Iterable[int], arities: Iterable[int]) -> SumPosition:
    return SumPosition(tuple(components), frozenset(arities))


def outcome_sum(s: SumPosition, memo: MemoTable = None) -> Outcome:
    return search(s,
                  key_of=lambda t: ('sum', t.arities, t.components),
                  children_of=SumPosition.options,
                  combine=normal_play,
                  memo=MemoTable() if memo is None else memo,
                  settle=settle_on_p)


def p_options_sum(s: SumPosition, memo: MemoTable = None) -> List[SumPosition]:
    '''Options of s that are P-positions, sorted by components.'''
    memo = MemoTable() if memo is None else memo
    return [t for t in s.options() if outcome_sum(t, memo) is Outcome.P]
