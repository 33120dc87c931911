'''
This file contains the Version C rules: parity lists for 3 to 5 piles, six piles with
at least two 1s, piles of size at most 3, the mod-3 conjecture and the position made
of k ones and one big pile.
'''

from functools import lru_cache
from typing import Dict, Optional, Tuple

from oooooob.classifiers.common import NOT_APPLICABLE, Applicability, applicable, decide
from oooooob.models.pattern import ParityPattern, parse_pattern
from oooooob.models.position import Outcome, Position, SizeCounts, to_counts
from oooooob.utilities.loaders import load_rule_book

SMALL_PILES_SPORADIC = frozenset({(0, 1, 3), (0, 2, 3), (1, 0, 2), (1, 0, 5), (2, 0, 1)})
SMALL_PILES_DAGGER = frozenset({(0, 0, 4), (0, 0, 5), (1, 1, 2), (1, 1, 3), (1, 1, 4),
                                (1, 1, 5), (2, 2, 3), (3, 0, 1), (3, 0, 2), (3, 0, 5)})
MOD3_EXCEPTION = Position((1, 1, 2, 2, 3, 3, 3))


@lru_cache(maxsize=None)
def parity_lists() -> Dict[int, Tuple[ParityPattern, ...]]:
    book = load_rule_book('version_c_piles')
    return {int(k): tuple(parse_pattern(str(t)) for t in entries)
            for k, entries in book.items()}


def c_345(p: Position) -> Applicability:
    patterns = parity_lists().get(len(p))
    if patterns is None:
        return NOT_APPLICABLE
    return decide(any(pattern.matches(p) for pattern in patterns))


def _six_with_ones_family(p: Position) -> Optional[int]:
    '''The 1-based index of the listed P family containing p, if any.'''
    _, _, p3, p4, p5, p6 = p
    ones = p.multiplicity(1)
    even, odd = (lambda x: x % 2 == 0), (lambda x: x % 2 == 1)

    if ones == 6:
        return 1
    if ones == 4 and even(p5) and odd(p6):
        return 2
    if ones == 3 and p5 == p6 and p4 % 2 == p5 % 2:
        return 3
    if ones == 2 and even(p3) and even(p4) and odd(p5) and odd(p6) \
            and (p5 != p6 or p3 == p4):
        return 4
    if p3 == p4 and odd(p3) and even(p5) and p6 == p5 + 1:
        return 5
    if ones == 2 and even(p3) and odd(p4) and even(p5) and even(p6) and p5 != p6:
        return 6
    if odd(p3) and p4 != p3 and p5 == p6 and p4 % 2 == p5 % 2:
        return 7
    return None


def c_six_with_ones(p: Position) -> Applicability:
    '''
    Six piles with at least two of size 1, read positionally on the sorted piles
    1,1,p3,p4,p5,p6:

    1. <1,1,1,1,1,1>
    2. <1,1,1,1,e,o>
    3. <1,1,1,x,y,y>, x and y of the same parity
    4. <1,1,e,e,o,o>, the last two different unless the two evens are equal too
    5. <1,1,x,x,y,y+1>, x odd and y even
    6. <1,1,e,o,e,e>, the last two different
    7. <1,1,x,y,z,z>, x odd, y != x, y and z of the same parity

    In families 3, 4 and 6 the letters stand for piles larger than 1.
    '''
    if len(p) != 6 or p.multiplicity(1) < 2:
        return NOT_APPLICABLE
    return decide(_six_with_ones_family(p) is not None)


def small_piles_mark(a1: int, a2: int, a3: int) -> Optional[str]:
    '''
    Which clause of the small-piles rule decides (a1, a2, a3): "axis", "sporadic" or
    "general" for P cells, "star" or "dagger" for the exceptions of the general
    clause, None for the remaining N cells.
    '''
    if a1 == 0 and a3 == 0:
        return 'axis'
    if (a1, a2, a3) in SMALL_PILES_SPORADIC:
        return 'sporadic'
    if (a1 + 2 * a2) % 3 != 0:
        return None
    if (a1, a2 % 3, a3) in {(0, 0, 1), (0, 0, 2), (1, 1, 0), (1, 1, 1), (2, 2, 0)}:
        return 'star'
    if (a1, a2, a3) in SMALL_PILES_DAGGER:
        return 'dagger'
    return 'general'


def c_bounded3(c: SizeCounts) -> Applicability:
    counts = c.trimmed()
    if counts.n > 3:
        raise ValueError(f'c_bounded3 takes at most 3 size classes, got {counts}')
    mark = small_piles_mark(counts.a(1), counts.a(2), counts.a(3))
    return decide(mark in ('axis', 'sporadic', 'general'))


def conjecture_c_mod3(p: Position, n: int) -> Applicability:
    '''With at least two piles of every size 1..n: P exactly when 3 divides the tokens.'''
    if n < 1 or p.max_pile != n or p == MOD3_EXCEPTION:
        return NOT_APPLICABLE
    counts = to_counts(p, n)
    if min(counts.counts) < 2:
        return NOT_APPLICABLE
    return decide(p.total_tokens % 3 == 0)


def mod3_counterexample(p: Position) -> bool:
    '''
    Two 1s and 3j + 2 piles of size 2. The conjecture calls these P, but the star
    exceptions of the small-piles rule make them N.
    '''
    if p.max_pile != 2:
        return False
    counts = to_counts(p, 2)
    return counts.a(1) == 2 and counts.a(2) % 3 == 2


def c_ones_big(k: int, n: int) -> Outcome:
    '''k piles of size 1 and one pile of size n (n = 0 meaning no big pile).'''
    if k < 0 or n < 0:
        raise ValueError(f'k and n must be nonnegative, got k={k}, n={n}')
    if k >= 2 * n:
        return Outcome.P if (k + n) % 3 == 0 else Outcome.N
    return Outcome.P if (k + 2 * n) % 4 == 0 else Outcome.N


def ones_big_coordinates(p: Position) -> Optional[Tuple[int, int]]:
    '''(k, n) when every pile but the largest has size 1, else None.'''
    if p.max_pile <= 1:
        return len(p), 0
    if any(x != 1 for x in p[:-1]):
        return None
    return len(p) - 1, p.max_pile


def ones_big_position(k: int, n: int) -> Position:
    return Position((1,) * k + (n,))
