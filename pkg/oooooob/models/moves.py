'''
This file contains the move generators of the three variants.

All generators work directly on the sorted pile tuple and keep it sorted, so every
option they produce is already canonical.
'''

from itertools import combinations, product
from typing import FrozenSet, List

from oooooob.models.position import Position, Variant, group_sizes


def _first_indices(position: Position) -> List[int]:
    '''Index of the first pile of every distinct size.'''
    firsts = []
    for i, x in enumerate(position):
        if i == 0 or position[i - 1] != x:
            firsts.append(i)
    return firsts


def _decrement(position: Position, indices) -> Position:
    # decrementing the first pile of a size keeps the tuple sorted
    piles = list(position)
    for i in indices:
        piles[i] -= 1
    return Position.trusted(x for x in piles if x)


def unioptions(position: Position) -> FrozenSet[Position]:
    '''Options that remove a single token, one per distinct pile size.'''
    return frozenset(_decrement(position, (i,)) for i in _first_indices(position))


def alloption(position: Position) -> Position:
    '''The option that removes one token from every pile.'''
    return Position.trusted(x - 1 for x in position if x > 1)


def pair_options(position: Position) -> FrozenSet[Position]:
    '''Options that remove one token from each of two distinct piles.'''
    firsts = _first_indices(position)
    result = set()
    for i, j in combinations(firsts, 2):
        result.add(_decrement(position, (i, j)))
    for i in firsts:
        if i + 1 < len(position) and position[i + 1] == position[i]:
            result.add(_decrement(position, (i, i + 1)))
    return frozenset(result)


def subset_options(position: Position) -> FrozenSet[Position]:
    '''
    Version A options: any nonempty set of piles loses one token each.
    Piles of equal size are interchangeable, so a move is described by how many
    piles of each size it touches.
    '''
    groups = group_sizes(position)
    result = set()
    for touched in product(*(range(m + 1) for _, m in groups)):
        if not any(touched):
            continue
        piles = []
        for (size, m), j in zip(groups, touched):
            if size > 1:
                piles.extend([size - 1] * j)
            piles.extend([size] * (m - j))
        result.add(Position.trusted(piles))
    return frozenset(result)


def options(variant: Variant, position: Position) -> FrozenSet[Position]:
    '''The set of positions reachable in one move; empty for the terminal position.'''
    if not isinstance(position, Position):
        position = Position(position)
    if not position:
        return frozenset()
    if variant is Variant.A:
        return subset_options(position)
    if variant is Variant.B:
        return unioptions(position) | {alloption(position)}
    if variant is Variant.C:
        return unioptions(position) | pair_options(position)
    raise ValueError(f'Unknown variant {variant!r}')
