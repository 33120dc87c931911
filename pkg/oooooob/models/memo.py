'''
This file contains the memo (transposition) table shared by the solvers.
'''

import logging
from typing import Any, Hashable, Iterator, Optional, Tuple

logger = logging.getLogger(__name__)


class BudgetExceededError(RuntimeError):
    '''Raised when solving would store more states than the configured cap.'''

    def __init__(self, max_states: int):
        super().__init__(f'Solver state budget of {max_states} states exceeded')
        self.max_states = max_states

    def __reduce__(self):
        return type(self), (self.max_states,)


class ConflictingEntryError(RuntimeError):
    '''Raised when a solved key would be overwritten with a different value.'''


class MemoTable():
    '''
    A write-once cache of solved states.

    Keys are hashable tuples such as (Variant, Position). An entry never changes once
    written: repeated writes of the same value are accepted, a different value raises
    ConflictingEntryError. Writes go through dict.setdefault, so threads sharing one
    table see each key written at most once.
    '''

    def __init__(self, max_states: Optional[int] = None):
        if max_states is not None and max_states < 1:
            raise ValueError(f'max_states must be positive, got {max_states}')
        self.max_states = max_states
        self._entries = {}

    def get(self, key: Hashable, default=None) -> Any:
        return self._entries.get(key, default)

    def __contains__(self, key: Hashable) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def record(self, key: Hashable, value: Any) -> Any:
        if self.max_states is not None and len(self._entries) >= self.max_states \
                and key not in self._entries:
            logger.warning(f'Memo table reached {self.max_states} states')
            raise BudgetExceededError(self.max_states)
        stored = self._entries.setdefault(key, value)
        if stored != value:
            raise ConflictingEntryError(
                f'Key {key!r} already solved as {stored!r}, refusing {value!r}')
        return stored

    def items(self) -> Iterator[Tuple[Hashable, Any]]:
        return iter(list(self._entries.items()))
