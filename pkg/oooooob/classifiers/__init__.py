'''
Registry of the closed-form rules. Every classifier is exposed as a function of
(variant, position) returning an Applicability, whatever its native arguments.
'''

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, FrozenSet, List, Optional, Tuple

from oooooob.classifiers.common import (NOT_APPLICABLE, Applicability, all_even_rule,
                                        applicable, classic_two_pile, odd_count_rule,
                                        version_a_rule)
from oooooob.classifiers.version_b import (b_bounded_size, b_k_piles, b_strip_ones,
                                           b_strip_twos, conjecture_b_parity)
from oooooob.classifiers.version_c import (c_345, c_bounded3, c_ones_big, c_six_with_ones,
                                           conjecture_c_mod3, mod3_counterexample,
                                           ones_big_coordinates)
from oooooob.models.position import Position, Variant, to_counts


class UnknownClassifierError(KeyError):
    '''Raised for a classifier or reduction id that is not registered.'''

    def __str__(self):
        return str(self.args[0]) if self.args else ''


class ClassifierId(Enum):
    CLASSIC_TWO_PILE = 'classic_two_pile'
    VERSION_A_RULE = 'version_a_rule'
    ALL_EVEN_RULE = 'all_even_rule'
    ODD_COUNT_RULE = 'odd_count_rule'
    B_K_PILES = 'b_k_piles'
    CONJECTURE_B_PARITY = 'conjecture_b_parity'
    B_BOUNDED_SIZE = 'b_bounded_size'
    C_345 = 'c_345'
    C_SIX_WITH_ONES = 'c_six_with_ones'
    C_BOUNDED3 = 'c_bounded3'
    CONJECTURE_C_MOD3 = 'conjecture_c_mod3'
    C_ONES_BIG = 'c_ones_big'

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Classifier:
    id: ClassifierId
    rule: Callable[[Variant, Position], Applicability]
    variants: FrozenSet[Variant]
    conjecture: bool = False
    # positions where a conjecture is known to be wrong
    known_counterexample: Optional[Callable[[Position], bool]] = None

    def is_known_counterexample(self, position: Position) -> bool:
        return self.known_counterexample is not None and self.known_counterexample(position)

    def __call__(self, variant: Variant, position: Position) -> Applicability:
        variant = Variant.parse(variant)
        if variant not in self.variants:
            raise ValueError(f'{self.id} is not stated for Version {variant}')
        return self.rule(variant, position)


def _bounded_size_b(v: Variant, p: Position) -> Applicability:
    return b_bounded_size(to_counts(p, max(p.max_pile, 1)))


def _bounded3_c(v: Variant, p: Position) -> Applicability:
    if p.max_pile > 3:
        return NOT_APPLICABLE
    return c_bounded3(to_counts(p, 3))


def _mod3_c(v: Variant, p: Position) -> Applicability:
    if not p:
        return NOT_APPLICABLE
    return conjecture_c_mod3(p, p.max_pile)


def _ones_big_c(v: Variant, p: Position) -> Applicability:
    coordinates = ones_big_coordinates(p)
    if coordinates is None:
        return NOT_APPLICABLE
    return applicable(c_ones_big(*coordinates))


_ALL = frozenset(Variant)
_B, _C = frozenset({Variant.B}), frozenset({Variant.C})

CLASSIFIERS: Dict[ClassifierId, Classifier] = {c.id: c for c in (
    Classifier(ClassifierId.CLASSIC_TWO_PILE, lambda v, p: classic_two_pile(p), _ALL),
    Classifier(ClassifierId.VERSION_A_RULE, lambda v, p: version_a_rule(p),
               frozenset({Variant.A})),
    Classifier(ClassifierId.ALL_EVEN_RULE, all_even_rule, _B | _C),
    Classifier(ClassifierId.ODD_COUNT_RULE, odd_count_rule, _B | _C),
    Classifier(ClassifierId.B_K_PILES, lambda v, p: b_k_piles(p), _B),
    Classifier(ClassifierId.CONJECTURE_B_PARITY, lambda v, p: conjecture_b_parity(p), _B,
               conjecture=True),
    Classifier(ClassifierId.B_BOUNDED_SIZE, _bounded_size_b, _B),
    Classifier(ClassifierId.C_345, lambda v, p: c_345(p), _C),
    Classifier(ClassifierId.C_SIX_WITH_ONES, lambda v, p: c_six_with_ones(p), _C),
    Classifier(ClassifierId.C_BOUNDED3, _bounded3_c, _C),
    Classifier(ClassifierId.CONJECTURE_C_MOD3, _mod3_c, _C, conjecture=True,
               known_counterexample=mod3_counterexample),
    Classifier(ClassifierId.C_ONES_BIG, _ones_big_c, _C),
)}

REDUCTIONS: Dict[str, Callable[[Position], Position]] = {
    'b_strip_ones': b_strip_ones,
    'b_strip_twos': b_strip_twos,
}


def classifier_id(text) -> ClassifierId:
    if isinstance(text, ClassifierId):
        return text
    try:
        return ClassifierId(str(text).strip())
    except ValueError:
        known = ', '.join(c.value for c in ClassifierId)
        raise UnknownClassifierError(
            f'Unknown classifier {text!r}, expected one of {known}') from None


def get_classifier(text) -> Classifier:
    return CLASSIFIERS[classifier_id(text)]


def get_reduction(name: str) -> Callable[[Position], Position]:
    try:
        return REDUCTIONS[name]
    except KeyError:
        raise UnknownClassifierError(
            f'Unknown reduction {name!r}, expected one of {", ".join(REDUCTIONS)}') from None


def classify(position: Position,
             variant: Optional[Variant] = None) -> List[Tuple[ClassifierId, Variant, Applicability]]:
    '''Every applicable verdict for position, over one variant or all three.'''
    if not isinstance(position, Position):
        position = Position(position)
    variants = list(Variant) if variant is None else [Variant.parse(variant)]
    verdicts = []
    for v in variants:
        for classifier in CLASSIFIERS.values():
            if v not in classifier.variants:
                continue
            verdict = classifier(v, position)
            if verdict.applicable:
                verdicts.append((classifier.id, v, verdict))
    return verdicts
