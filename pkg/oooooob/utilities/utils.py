# This file contains support functions shared by the command line and the reports.

import logging
import sys
from typing import Iterable

from oooooob.models.position import Position


def parse_position(text: str) -> Position:
    '''
    Parses "2,3,3,3" into a canonical Position. Whitespace is ignored, zeros are
    dropped and the piles are sorted; the empty string is the terminal position.
    '''
    body = text.strip()
    if not body:
        return Position()
    piles = []
    for field in body.split(','):
        field = field.strip()
        try:
            piles.append(int(field))
        except ValueError:
            raise ValueError(f'Bad pile size {field!r} in position {text!r}') from None
    return Position(piles)


def format_position(position: Iterable[int]) -> str:
    return str(Position(position))


def setup_logging(verbosity: int = 0) -> None:
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, force=True,
                        format='%(asctime)s %(levelname)s %(name)s: %(message)s')
