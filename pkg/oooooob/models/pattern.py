'''
This file contains the pattern notations used to state P-position rules.

Two notations describe positions pile by pile:

- multiset patterns such as ``e2,o3,o3,o3`` or ``1,2,e2,e2,o3``: every slot must be
  taken by a different pile, in any order.
- positional patterns such as ``<o,o,e,e,o>``: slot i constrains the i-th smallest pile.

A third notation describes SizeCounts one size class at a time, e.g.
``(o, >=1, e_4, 2)`` or ``(e, e, o, o, {1, 3}) - (e, e, o, 3, 3)``.
'''

import re
from collections import Counter
from dataclasses import dataclass
from typing import FrozenSet, Optional, Sequence, Tuple, Union

from oooooob.models.position import Position, SizeCounts


@dataclass(frozen=True)
class EvenAtLeast:
    k: int

    def accepts(self, x: int) -> bool:
        return x % 2 == 0 and x >= self.k


@dataclass(frozen=True)
class OddAtLeast:
    k: int

    def accepts(self, x: int) -> bool:
        return x % 2 == 1 and x >= self.k


@dataclass(frozen=True)
class Exactly:
    c: int

    def accepts(self, x: int) -> bool:
        return x == self.c


@dataclass(frozen=True)
class AtLeast:
    k: int

    def accepts(self, x: int) -> bool:
        return x >= self.k


@dataclass(frozen=True)
class OneOf:
    values: FrozenSet[int]

    def accepts(self, x: int) -> bool:
        return x in self.values


Slot = Union[EvenAtLeast, OddAtLeast, Exactly]
CountSlot = Union[EvenAtLeast, OddAtLeast, Exactly, AtLeast, OneOf]


def _slot_text(slot, positional: bool = False) -> str:
    if isinstance(slot, Exactly):
        return str(slot.c)
    if isinstance(slot, EvenAtLeast):
        return 'e' if positional and slot.k == 2 else f'e{slot.k}'
    if isinstance(slot, OddAtLeast):
        return 'o' if positional and slot.k == 1 else f'o{slot.k}'
    if isinstance(slot, AtLeast):
        return f'>={slot.k}'
    return '{' + ', '.join(str(v) for v in sorted(slot.values)) + '}'


def _dominates(values: Sequence[int], thresholds: Sequence[int]) -> bool:
    # sorted piles against sorted minimum sizes is an optimal assignment
    if len(values) != len(thresholds):
        return False
    return all(v >= t for v, t in zip(sorted(values), sorted(thresholds)))


@dataclass(frozen=True)
class ParityPattern:
    '''
    A sequence of pile constraints (EvenAtLeast, OddAtLeast, Exactly).

    With positional=False the slots are matched as a multiset: some assignment of the
    piles to the slots must satisfy every slot. With positional=True slot i applies to
    the i-th smallest pile.
    '''
    slots: Tuple[Slot, ...]
    positional: bool = False

    def __len__(self):
        return len(self.slots)

    def matches(self, position: Position) -> bool:
        piles = tuple(position)
        if len(piles) != len(self.slots):
            return False
        if self.positional:
            return all(slot.accepts(x) for slot, x in zip(self.slots, sorted(piles)))

        remaining = Counter(piles)
        even_thresholds, odd_thresholds = [], []
        for slot in self.slots:
            if isinstance(slot, Exactly):
                if remaining[slot.c] == 0:
                    return False
                remaining[slot.c] -= 1
            elif isinstance(slot, EvenAtLeast):
                even_thresholds.append(slot.k)
            else:
                odd_thresholds.append(slot.k)
        evens = [x for x, m in remaining.items() if x % 2 == 0 for _ in range(m)]
        odds = [x for x, m in remaining.items() if x % 2 == 1 for _ in range(m)]
        return _dominates(evens, even_thresholds) and _dominates(odds, odd_thresholds)

    def __str__(self):
        body = ','.join(_slot_text(s, self.positional) for s in self.slots)
        return f'<{body}>' if self.positional else body


def matches(pattern: ParityPattern, position: Position) -> bool:
    return pattern.matches(position)


_PILE_TOKEN = re.compile(r'^(?:(?P<parity>[eo])_?(?P<k>\d+)?|(?P<literal>\d+))$')


def parse_pattern(text: str) -> ParityPattern:
    '''
    Parses ``e2,o3,o3,o3`` (multiset) or ``<o,o,e,e,o>`` / ``⟨o,o,e,e,o⟩`` (positional).
    A bare ``e`` means an even pile (at least 2), a bare ``o`` an odd pile.
    '''
    body = text.strip()
    positional = False
    if body[:1] in ('<', '⟨'):
        if body[-1:] not in ('>', '⟩'):
            raise ValueError(f'Unterminated positional pattern {text!r}')
        positional = True
        body = body[1:-1].strip()

    slots = []
    for token in (t.strip() for t in body.split(',')) if body else ():
        match = _PILE_TOKEN.match(token)
        if match is None:
            raise ValueError(f'Bad pattern slot {token!r} in {text!r}')
        if match.group('literal') is not None:
            c = int(match.group('literal'))
            if c < 1:
                raise ValueError(f'Pile literals must be positive in {text!r}')
            slots.append(Exactly(c))
        elif match.group('parity') == 'e':
            k = match.group('k')
            slots.append(EvenAtLeast(2 if k is None else int(k)))
        else:
            k = match.group('k')
            slots.append(OddAtLeast(1 if k is None else int(k)))
    return ParityPattern(tuple(slots), positional)


@dataclass(frozen=True)
class CountPattern:
    '''
    A constraint per size class on the counts (a_1, ..., a_n), with an optional
    excluded sub-pattern: ``A - B`` matches what A matches and B does not.
    Here ``e`` means an even count, zero included.
    '''
    include: Tuple[CountSlot, ...]
    exclude: Optional[Tuple[CountSlot, ...]] = None

    @property
    def n(self) -> int:
        return len(self.include)

    @staticmethod
    def _fits(slots, values) -> bool:
        return all(slot.accepts(v) for slot, v in zip(slots, values))

    def matches(self, counts: SizeCounts) -> bool:
        trimmed = counts.trimmed()
        if trimmed.n > self.n:
            return False
        values = trimmed.padded(self.n).counts
        if not self._fits(self.include, values):
            return False
        return self.exclude is None or not self._fits(self.exclude, values)

    def __str__(self):
        text = '(' + ', '.join(_slot_text(s) for s in self.include) + ')'
        if self.exclude is not None:
            text += ' - (' + ', '.join(_slot_text(s) for s in self.exclude) + ')'
        return text


_COUNT_TOKEN = re.compile(
    r'^(?:(?P<parity>[eo])_?(?P<k>\d+)?|(?:>=|≥)\s*(?P<atleast>\d+)|(?P<literal>\d+)'
    r'|\{(?P<set>[\d,\s]+)\})$')
_TUPLE = re.compile(r'\(([^()]*)\)')
_FIELD = re.compile(r'\s*\{[^}]*\}|[^,]+')


def _parse_count_slot(token: str, text: str) -> CountSlot:
    match = _COUNT_TOKEN.match(token)
    if match is None:
        raise ValueError(f'Bad count slot {token!r} in {text!r}')
    if match.group('parity') == 'e':
        k = match.group('k')
        return EvenAtLeast(0 if k is None else int(k))
    if match.group('parity') == 'o':
        k = match.group('k')
        return OddAtLeast(1 if k is None else int(k))
    if match.group('atleast') is not None:
        return AtLeast(int(match.group('atleast')))
    if match.group('literal') is not None:
        return Exactly(int(match.group('literal')))
    return OneOf(frozenset(int(v) for v in match.group('set').split(',')))


def _parse_count_tuple(body: str, text: str) -> Tuple[CountSlot, ...]:
    return tuple(_parse_count_slot(f.strip(), text) for f in _FIELD.findall(body))


def parse_count_pattern(text: str) -> CountPattern:
    tuples = _TUPLE.findall(text)
    if len(tuples) not in (1, 2):
        raise ValueError(f'Expected "(...)" or "(...) - (...)", got {text!r}')
    include = _parse_count_tuple(tuples[0], text)
    exclude = None
    if len(tuples) == 2:
        if '-' not in _TUPLE.sub('', text):
            raise ValueError(f'Missing "-" between tuples in {text!r}')
        exclude = _parse_count_tuple(tuples[1], text)
        if len(exclude) != len(include):
            raise ValueError(f'Tuples of different length in {text!r}')
    return CountPattern(include, exclude)


def matches_counts(pattern: CountPattern, counts: SizeCounts) -> bool:
    return pattern.matches(counts)
