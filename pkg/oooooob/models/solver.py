'''
This file contains the exact solvers for the three variants: outcome classes, winning
moves, Grundy values and bulk region solving, all backed by a MemoTable.

Searches never recurse. A work stack holds the states still being expanded, so the
depth of a search is bounded by memory and not by the interpreter's call stack.
'''

import logging
from typing import Callable, Hashable, Iterable, List, Optional, Sequence, Tuple

import pandas as pd

from oooooob.models.memo import BudgetExceededError, MemoTable
from oooooob.models.moves import options
from oooooob.models.position import Outcome, Position, Variant

logger = logging.getLogger(__name__)

GRUNDY = 'grundy'


def search(root,
           key_of: Callable[[object], Hashable],
           children_of: Callable[[object], Iterable],
           combine: Callable[[List[object]], object],
           memo: MemoTable,
           settle: Optional[Callable[[object], object]] = None):
    '''
    Evaluates root in an acyclic game graph with an explicit work stack.

    combine(values) maps the values of all children to the value of the parent.
    settle(value), when given, may decide the parent from a single solved child (an
    N parent as soon as one P child is known); children are then expanded one at a
    time so that the rest can be skipped.
    '''
    root_key = key_of(root)
    solved = memo.get(root_key)
    if solved is not None:
        return solved

    stack = [[root, root_key, None]]
    while stack:
        frame = stack[-1]
        state, key, children = frame
        if key in memo:
            stack.pop()
            continue
        if children is None:
            children = [(child, key_of(child)) for child in children_of(state)]
            frame[2] = children

        pending = []
        decided = None
        for child, child_key in children:
            value = memo.get(child_key)
            if value is None:
                pending.append((child, child_key))
            elif settle is not None:
                decided = settle(value)
                if decided is not None:
                    break

        if decided is not None:
            memo.record(key, decided)
            stack.pop()
        elif pending:
            if settle is not None:
                stack.append([pending[0][0], pending[0][1], None])
            else:
                stack.extend([child, child_key, None] for child, child_key in pending)
        else:
            memo.record(key, combine([memo.get(child_key) for _, child_key in children]))
            stack.pop()

    return memo.get(root_key)


def normal_play(values: Sequence[Outcome]) -> Outcome:
    '''P exactly when every option is N (vacuously for a terminal position).'''
    return Outcome.N if any(v is Outcome.P for v in values) else Outcome.P


def settle_on_p(value: Outcome) -> Optional[Outcome]:
    return Outcome.N if value is Outcome.P else None


def mex(values: Iterable[int]) -> int:
    '''Minimum excludant: the least nonnegative integer not in values.'''
    seen = set(values)
    m = 0
    while m in seen:
        m += 1
    return m


def _prepare(variant, position, memo) -> Tuple[Variant, Position, MemoTable]:
    variant = Variant.parse(variant)
    if not isinstance(position, Position):
        position = Position(position)
    return variant, position, MemoTable() if memo is None else memo


def outcome(variant: Variant, position: Position, memo: MemoTable = None) -> Outcome:
    '''The outcome class of position under variant; memo receives every state visited.'''
    variant, position, memo = _prepare(variant, position, memo)
    return search(position,
                  key_of=lambda p: (variant, p),
                  children_of=lambda p: sorted(options(variant, p)),
                  combine=normal_play,
                  memo=memo,
                  settle=settle_on_p)


def p_option(variant: Variant, position: Position,
             memo: MemoTable = None) -> Optional[Position]:
    '''
    The lexicographically smallest option that is a P-position, or None when the
    position is itself a P-position.
    '''
    variant, position, memo = _prepare(variant, position, memo)
    if outcome(variant, position, memo) is Outcome.P:
        return None
    for candidate in sorted(options(variant, position)):
        if outcome(variant, candidate, memo) is Outcome.P:
            return candidate
    raise AssertionError(f'N-position {position} has no P-option')


def grundy(variant: Variant, position: Position, memo: MemoTable = None) -> int:
    variant, position, memo = _prepare(variant, position, memo)
    return search(position,
                  key_of=lambda p: (variant, p, GRUNDY),
                  children_of=lambda p: sorted(options(variant, p)),
                  combine=mex,
                  memo=memo)


def solve_region(variant: Variant, region, max_states: Optional[int] = None,
                 memo: MemoTable = None) -> List[Tuple[Position, Outcome]]:
    '''
    Solves every position of region, in increasing total-token order so that most
    options are already solved when a position is reached. Returns (position,
    outcome) pairs in the region's lexicographic order.
    '''
    variant = Variant.parse(variant)
    positions = list(region.positions())
    if memo is None:
        memo = MemoTable(max_states)
    cap = max_states if max_states is not None else memo.max_states
    if cap is not None and len(positions) > cap:
        raise BudgetExceededError(cap)

    logger.info(f'Solving {len(positions)} positions of {region} under Version {variant}')
    for position in sorted(positions, key=lambda p: (p.total_tokens, p)):
        outcome(variant, position, memo)
    return [(p, memo.get((variant, p))) for p in positions]


def audit(memo: MemoTable) -> List[Hashable]:
    '''
    Re-walks a memo table and returns the keys whose stored value disagrees with the
    recursion: a P entry needs every option solved as N, an N entry needs some option
    solved as P, a Grundy entry needs the mex of its options.
    '''
    violations = []
    for key, value in memo.items():
        if not (isinstance(key, tuple) and key and isinstance(key[0], Variant)):
            continue
        variant, position = key[0], key[1]
        opts = options(variant, position)
        if len(key) == 2:
            values = [memo.get((variant, o)) for o in opts]
            if value is Outcome.P:
                ok = all(v is Outcome.N for v in values)
            else:
                ok = any(v is Outcome.P for v in values)
        else:
            values = [memo.get((variant, o, GRUNDY)) for o in opts]
            ok = None not in values and value == mex(values)
        if not ok:
            violations.append(key)
    return violations


def region_table_frame(rows: Iterable[Tuple[Position, Outcome]]) -> pd.DataFrame:
    ordered = sorted(rows, key=lambda row: (len(row[0]), tuple(row[0])))
    return pd.DataFrame({'position': [str(p) for p, _ in ordered],
                         'outcome': [str(o) for _, o in ordered]},
                        columns=['position', 'outcome'])


def format_region_table(rows: Iterable[Tuple[Position, Outcome]], fmt: str = 'csv') -> str:
    '''Serializes solve_region output as CSV or JSON lines.'''
    frame = region_table_frame(rows)
    if fmt == 'csv':
        return frame.to_csv(index=False, lineterminator='\n')
    if fmt == 'jsonl':
        if frame.empty:
            return ''
        return frame.to_json(orient='records', lines=True).rstrip('\n') + '\n'
    raise ValueError(f'Unknown table format {fmt!r}, expected csv or jsonl')
