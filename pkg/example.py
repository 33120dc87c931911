"""
This script walks through the oooooob library: outcomes, winning moves, the closed-form
rules and one verification sweep.
"""
from oooooob.classifiers import classify
from oooooob.models.memo import MemoTable
from oooooob.models.position import Position, Variant
from oooooob.models.solver import grundy, outcome, p_option
from oooooob.verify.grids import emit_grid
from oooooob.verify.harness import check_classifier
from oooooob.verify.regions import PileCountRegion


def example():
    """
    Solves a few positions under each variant and checks one rule against the oracle.
    """

    memo = MemoTable(max_states=1_000_000)

    for variant in Variant:
        position = Position((2, 3, 3, 3))
        move = p_option(variant, position, memo)
        print(f'Version {variant} on {position}: {outcome(variant, position, memo)}, '
              f'grundy {grundy(variant, position, memo)}, '
              f'move to {"none" if move is None else move}')

    for verdict_id, variant, verdict in classify(Position((1, 1, 3))):
        print(f'{verdict_id.value} [{variant}]: {verdict}')

    # the four-pile rule of Version B against the search, sizes up to 8
    report = check_classifier('b_k_piles', Variant.B, PileCountRegion(4, 8))
    print(report.to_text())

    print(emit_grid('ones-big', (6, 12), memo=memo))


if __name__ == "__main__":
    example()
