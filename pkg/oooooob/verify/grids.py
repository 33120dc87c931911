'''
This file contains the outcome grids of Version C drawn as tables of P cells.

- ones-big: rows n, columns k, for k piles of size 1 and one pile of size n
- small-piles: one page per a3, rows a2, columns a1, for a_i piles of size i

Cells are filled by the search oracle; N cells stay blank. The small-piles grid can
carry a legend naming the clause of the closed form behind each marked cell.
'''

import json
from dataclasses import dataclass
from typing import Dict, List, Optional, Set, Tuple

import numpy as np
import pandas as pd

from oooooob.classifiers.version_c import ones_big_position, small_piles_mark
from oooooob.models.memo import MemoTable
from oooooob.models.position import Outcome, SizeCounts, Variant, from_counts
from oooooob.models.solver import outcome

ONES_BIG = 'ones-big'
SMALL_PILES = 'small-piles'
GRID_KINDS = (ONES_BIG, SMALL_PILES)


@dataclass
class Grid:
    kind: str
    row_label: str
    column_label: str
    page_label: Optional[str]
    # (page value, boolean matrix of P cells indexed [row, column])
    pages: List[Tuple[Optional[int], np.ndarray]]
    legend: Optional[List[Dict]] = None

    @property
    def columns(self) -> int:
        return self.pages[0][1].shape[1] if self.pages else 0

    def p_cells(self) -> Set[Tuple[int, ...]]:
        '''(column, row) for ones-big, (a1, a2, a3) for small-piles.'''
        cells = set()
        for page, matrix in self.pages:
            for row, column in zip(*np.nonzero(matrix)):
                cell = (int(column), int(row))
                cells.add(cell if page is None else cell + (page,))
        return cells


def ones_big_grid(max_n: int, max_k: int, memo: MemoTable = None) -> Grid:
    memo = MemoTable() if memo is None else memo
    matrix = np.zeros((max(max_n + 1, 0), max(max_k + 1, 0)), dtype=bool)
    for n in range(max_n + 1):
        for k in range(max_k + 1):
            matrix[n, k] = outcome(Variant.C, ones_big_position(k, n), memo) is Outcome.P
    return Grid(ONES_BIG, 'n', 'k', None, [(None, matrix)])


def small_piles_grid(max_a1: int, max_a2: int, max_a3: int, memo: MemoTable = None,
                     legend: bool = False) -> Grid:
    memo = MemoTable() if memo is None else memo
    pages, marks = [], []
    shape = (max(max_a2 + 1, 0), max(max_a1 + 1, 0))
    for a3 in range(max_a3 + 1):
        matrix = np.zeros(shape, dtype=bool)
        for a2 in range(max_a2 + 1):
            for a1 in range(max_a1 + 1):
                position = from_counts(SizeCounts((a1, a2, a3)))
                matrix[a2, a1] = outcome(Variant.C, position, memo) is Outcome.P
                mark = small_piles_mark(a1, a2, a3)
                if legend and mark is not None:
                    marks.append({'a1': a1, 'a2': a2, 'a3': a3, 'mark': mark})
        pages.append((a3, matrix))
    return Grid(SMALL_PILES, 'a2', 'a1', 'a3', pages, marks if legend else None)


def _cell(value: bool) -> str:
    return 'P' if value else ''


def _ascii_table(grid: Grid, matrix: np.ndarray) -> List[str]:
    corner = f'{grid.row_label}\\{grid.column_label}'
    rows, columns = matrix.shape
    label_width = max(len(corner), len(str(max(rows - 1, 0))))
    width = len(str(max(columns - 1, 0)))
    header = ' '.join(str(c).rjust(width) for c in range(columns))
    lines = [f'{corner.ljust(label_width)} | {header}'.rstrip(),
             '-' * label_width + '-+-' + '-' * len(header)]
    for r in range(rows):
        cells = ' '.join(_cell(v).rjust(width) for v in matrix[r])
        lines.append(f'{str(r).ljust(label_width)} | {cells}'.rstrip())
    return lines


def to_ascii(grid: Grid) -> str:
    blocks = []
    for page, matrix in grid.pages:
        lines = _ascii_table(grid, matrix)
        if page is not None:
            lines.insert(0, f'{grid.page_label} = {page}')
        blocks.append('\n'.join(lines))
    if not blocks:
        blocks.append('\n'.join(_ascii_table(grid, np.zeros((0, 0), dtype=bool))))
    return '\n\n'.join(blocks) + '\n'


def to_frame(grid: Grid) -> pd.DataFrame:
    labels = [grid.row_label] if grid.page_label is None else [grid.page_label, grid.row_label]
    columns = labels + [str(c) for c in range(grid.columns)]
    rows = []
    for page, matrix in grid.pages:
        for r in range(matrix.shape[0]):
            prefix = [r] if page is None else [page, r]
            rows.append(prefix + [_cell(v) for v in matrix[r]])
    return pd.DataFrame(rows, columns=columns)


def to_csv(grid: Grid) -> str:
    return to_frame(grid).to_csv(index=False, lineterminator='\n')


def to_json(grid: Grid) -> str:
    document = {
        'kind': grid.kind,
        'row': grid.row_label,
        'column': grid.column_label,
        'page': grid.page_label,
        'pages': [{'value': page,
                   'cells': [[_cell(v) for v in row] for row in matrix]}
                  for page, matrix in grid.pages],
    }
    if grid.legend is not None:
        document['legend'] = grid.legend
    return json.dumps(document, indent=2) + '\n'


def render(grid: Grid, fmt: str = 'ascii') -> str:
    if fmt in ('ascii', 'text'):
        return to_ascii(grid)
    if fmt == 'csv':
        return to_csv(grid)
    if fmt == 'json':
        return to_json(grid)
    raise ValueError(f'Unknown grid format {fmt!r}, expected ascii, csv or json')


def emit_grid(kind: str, bounds: Tuple[int, ...], fmt: str = 'ascii',
              legend: bool = False, memo: MemoTable = None) -> str:
    '''
    bounds is (max_n, max_k) for ones-big and (max_a1, max_a2, max_a3) for
    small-piles; a negative bound leaves that axis empty.
    '''
    if kind == ONES_BIG:
        grid = ones_big_grid(*bounds, memo=memo)
    elif kind == SMALL_PILES:
        grid = small_piles_grid(*bounds, memo=memo, legend=legend)
    else:
        raise ValueError(f'Unknown grid kind {kind!r}, expected one of {GRID_KINDS}')
    return render(grid, fmt)
