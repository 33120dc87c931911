'''
This file contains the verdict type of the classifiers and the rules shared by
several variants: the two-pile rule, the Version A rule and the parity rules of
Versions B and C.
'''

from dataclasses import dataclass
from typing import Optional

from oooooob.models.position import Outcome, Position, Variant, parity_census


@dataclass(frozen=True)
class Applicability:
    '''
    The verdict of a classifier: Applicable(outcome) when the position satisfies the
    rule's hypothesis, NotApplicable (outcome None) otherwise.
    '''
    outcome: Optional[Outcome] = None

    @property
    def applicable(self) -> bool:
        return self.outcome is not None

    def __str__(self):
        return str(self.outcome) if self.applicable else 'n/a'


NOT_APPLICABLE = Applicability()


def applicable(outcome: Outcome) -> Applicability:
    return Applicability(Outcome.parse(outcome))


def decide(is_p: bool) -> Applicability:
    return Applicability(Outcome.P if is_p else Outcome.N)


def _require_b_or_c(variant: Variant) -> Variant:
    variant = Variant.parse(variant)
    if variant is Variant.A:
        raise ValueError('This rule is stated for Versions B and C only')
    return variant


def classic_two_pile(p: Position) -> Applicability:
    '''Two piles: P exactly when both piles are even.'''
    if len(p) != 2:
        return NOT_APPLICABLE
    return decide(p[0] % 2 == 0 and p[1] % 2 == 0)


def version_a_rule(p: Position) -> Applicability:
    '''Version A: P exactly when every pile is even.'''
    return decide(all(x % 2 == 0 for x in p))


def all_even_rule(v: Variant, p: Position) -> Applicability:
    _require_b_or_c(v)
    if all(x % 2 == 0 for x in p):
        return applicable(Outcome.P)
    return NOT_APPLICABLE


def odd_count_rule(v: Variant, p: Position) -> Applicability:
    '''
    N-positions read off the number of odd piles: one odd pile under B and C, all
    piles odd under B, exactly two odd piles under C.
    '''
    v = _require_b_or_c(v)
    _, odd = parity_census(p)
    if v is Variant.B:
        if odd == 1 or (len(p) >= 1 and odd == len(p)):
            return applicable(Outcome.N)
    elif odd in (1, 2):
        return applicable(Outcome.N)
    return NOT_APPLICABLE
