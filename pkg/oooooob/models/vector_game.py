'''
This file contains the vector subtraction games that two of the variants reduce to.

A position is a point of N^d and a move adds one vector of the move set while staying
in N^d. CLASSIC_GAME is two-pile OOOOOOB itself; ONES_BIG_GAME is Version C played on
k piles of size 1 plus one pile of size n, written as the point (k, n).
'''

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

import numpy as np

from oooooob.models.memo import MemoTable
from oooooob.models.position import Outcome
from oooooob.models.solver import normal_play, search, settle_on_p


@dataclass(frozen=True)
class VectorGame:
    name: str
    moves: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        moves = tuple(sorted({tuple(int(c) for c in m) for m in self.moves}))
        if not moves:
            raise ValueError(f'{self.name}: the move set is empty')
        dims = {len(m) for m in moves}
        if len(dims) != 1 or 0 in dims:
            raise ValueError(f'{self.name}: moves must share one positive dimension')
        for m in moves:
            if max(m) > 0 or not any(m):
                raise ValueError(f'{self.name}: move {m} must be nonpositive and nonzero')
        object.__setattr__(self, 'moves', moves)

    @property
    def dimension(self) -> int:
        return len(self.moves[0])

    def options(self, x: Sequence[int]) -> List[Tuple[int, ...]]:
        point = np.asarray(x, dtype=np.int64)
        shifted = point + np.asarray(self.moves, dtype=np.int64)
        legal = shifted[(shifted >= 0).all(axis=1)]
        return sorted({tuple(int(c) for c in row) for row in legal})


CLASSIC_GAME = VectorGame('classic', ((-1, 0), (0, -1), (-1, -1)))
ONES_BIG_GAME = VectorGame('ones_big', ((0, -1), (-1, 0), (-2, 0), (-1, -1)))


def _point(g: VectorGame, x: Iterable[int]) -> Tuple[int, ...]:
    point = tuple(int(c) for c in x)
    if len(point) != g.dimension:
        raise ValueError(
            f'{g.name} is {g.dimension}-dimensional, got the point {point}')
    if any(c < 0 for c in point):
        raise ValueError(f'Vector game points must be nonnegative, got {point}')
    return point


def outcome_vector(g: VectorGame, x: Iterable[int], memo: MemoTable = None) -> Outcome:
    point = _point(g, x)
    return search(point,
                  key_of=lambda y: (g, y),
                  children_of=g.options,
                  combine=normal_play,
                  memo=MemoTable() if memo is None else memo,
                  settle=settle_on_p)


def outcome_grid(g: VectorGame, shape: Tuple[int, int], memo: MemoTable = None) -> np.ndarray:
    '''
    Boolean matrix of P-positions of a 2-dimensional game: cell [i, j] is the point
    (i, j), for 0 <= i < shape[0] and 0 <= j < shape[1].
    '''
    if g.dimension != 2:
        raise ValueError(f'{g.name} is not 2-dimensional')
    memo = MemoTable() if memo is None else memo
    grid = np.zeros(shape, dtype=bool)
    for i in range(shape[0]):
        for j in range(shape[1]):
            grid[i, j] = outcome_vector(g, (i, j), memo) is Outcome.P
    return grid
