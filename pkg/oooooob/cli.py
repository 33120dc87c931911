'''
This file contains the command line of oooooob.

Exit codes: 0 on success (PASS or PARTIAL for sweeps), 1 when a sweep finds a
mismatch or a memo entry conflicts, 2 on bad flags, profiles or environment values,
3 when the solver state budget is exceeded.
'''

import json
import logging
import os
import sys
from contextlib import contextmanager

import pandas as pd

from oooooob.classifiers import UnknownClassifierError, classify
from oooooob.classifiers.base_tables import TABLE_SIZES, write_table
from oooooob.models.memo import BudgetExceededError, ConflictingEntryError, MemoTable
from oooooob.models.solver import format_region_table, outcome, p_option, solve_region
from oooooob.utilities.arg_parser import arg_parser
from oooooob.utilities.loaders import MAX_STATES_ENV, load_profile, resolve_max_states
from oooooob.utilities.utils import setup_logging
from oooooob.verify.grids import ONES_BIG, emit_grid
from oooooob.verify.harness import (CONJECTURES, default_workers, run_conjectures, run_profile,
                                    validate_profile)
from oooooob.verify.reports import Status, format_reports, overall_status

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3



class UsageError(Exception):
    '''A bad flag, profile or environment value. Exits with EXIT_USAGE.'''


@contextmanager
def _usage():
    try:
        yield
    except (UnknownClassifierError, ValueError, OSError) as e:
        raise UsageError(str(e)) from e


@contextmanager
def _output(path):
    if path is None:
        yield sys.stdout
        return
    with _usage():
        f = open(path, 'w', encoding='utf-8', newline='\n')
    with f:
        yield f


def _write(args, document: str) -> None:
    with _output(args.output) as out:
        out.write(document)


def _memo(args) -> MemoTable:
    with _usage():
        return MemoTable(resolve_max_states(args.max_states))


def _outcome(args) -> int:
    result = outcome(args.variant, args.position, _memo(args))
    if args.format == 'json':
        _write(args, json.dumps({'variant': str(args.variant),
                                 'position': str(args.position),
                                 'outcome': str(result)}, indent=2) + '\n')
    else:
        _write(args, f'{result}\n')
    return EXIT_OK


def _best_move(args) -> int:
    memo = _memo(args)
    move = p_option(args.variant, args.position, memo)
    if args.format == 'json':
        _write(args, json.dumps({'variant': str(args.variant),
                                 'position': str(args.position),
                                 'outcome': str(outcome(args.variant, args.position, memo)),
                                 'move': None if move is None else str(move)}, indent=2) + '\n')
    else:
        _write(args, f'{"none" if move is None else move}\n')
    return EXIT_OK


def _classify(args) -> int:
    verdicts = classify(args.position, args.variant)
    rows = [{'classifier': c.value, 'variant': str(v), 'outcome': str(a)}
            for c, v, a in verdicts]
    if args.format == 'json':
        document = json.dumps({'position': str(args.position), 'verdicts': rows},
                              indent=2) + '\n'
    elif args.format == 'csv':
        document = pd.DataFrame(rows, columns=['classifier', 'variant', 'outcome']) \
            .to_csv(index=False, lineterminator='\n')
    else:
        document = ''.join(f'{r["classifier"]} {r["variant"]} {r["outcome"]}\n' for r in rows) \
            or 'none\n'
    _write(args, document)
    return EXIT_OK


def _sweep_settings(args, lemma_ids):
    with _usage():
        profile = load_profile(args.config or args.profile)
        max_states = resolve_max_states(args.max_states, profile)
        for lemma_id in lemma_ids:
            validate_profile(profile, lemma_id)
    workers = args.workers if args.workers is not None else profile.get('workers', 1)
    if workers <= 0:
        workers = default_workers()
    return profile, max_states, workers


def _report(args, reports) -> int:
    _write(args, format_reports(reports, args.format))
    status = overall_status(reports)
    logger.info(f'Overall status: {status}')
    return EXIT_FAIL if status is Status.FAIL else EXIT_OK


def _verify(args) -> int:
    profile, max_states, workers = _sweep_settings(args, [args.lemma])
    return _report(args, run_profile(args.lemma, profile, max_states, workers))


def _conjectures(args) -> int:
    profile, max_states, workers = _sweep_settings(args, CONJECTURES)
    return _report(args, run_conjectures(profile, max_states, workers))


def _enumerate(args) -> int:
    positions = args.region.positions()
    if args.format == 'json':
        _write(args, json.dumps([str(p) for p in positions], indent=2) + '\n')
    elif args.format == 'csv':
        frame = pd.DataFrame({'position': [str(p) for p in positions]}, columns=['position'])
        _write(args, frame.to_csv(index=False, lineterminator='\n'))
    else:
        with _output(args.output) as out:
            for position in positions:
                out.write(f'{position}\n')
    return EXIT_OK


def _solve(args) -> int:
    with _usage():
        max_states = resolve_max_states(args.max_states)
    rows = solve_region(args.variant, args.region, max_states=max_states)
    _write(args, format_region_table(rows, args.format))
    return EXIT_OK


def _grid(args) -> int:
    if args.kind == ONES_BIG:
        bounds = (args.max_n, args.max_k)
    else:
        bounds = (args.max_a1, args.max_a2, args.max_a3)
    _write(args, emit_grid(args.kind, bounds, args.format, args.legend, _memo(args)))
    return EXIT_OK


def _tables(args) -> int:
    if args.output is not None and not os.path.isdir(args.output):
        raise UsageError(f'{args.output} is not a directory')
    paths = []
    for n in sorted(set(args.sizes or TABLE_SIZES)):
        path = None if args.output is None else os.path.join(args.output, f'base_cases_max{n}.txt')
        paths.append(write_table(n, path))
    sys.stdout.write(''.join(f'{p}\n' for p in paths))
    return EXIT_OK


COMMANDS = {
    'outcome': _outcome,
    'best-move': _best_move,
    'classify': _classify,
    'verify': _verify,
    'conjectures': _conjectures,
    'enumerate': _enumerate,
    'solve': _solve,
    'grid': _grid,
    'tables': _tables,
}


def main(argv=None) -> int:
    parser = arg_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    setup_logging(args.verbose)
    try:
        return COMMANDS[args.command](args)
    except BudgetExceededError as e:
        logger.error(f'{e}; raise --max-states or ${MAX_STATES_ENV}')
        return EXIT_BUDGET
    except ConflictingEntryError as e:
        logger.error(f'The solver contradicted itself: {e}')
        return EXIT_FAIL
    except UsageError as e:
        sys.stderr.write(f'{parser.prog}: error: {e}\n')
        return EXIT_USAGE


if __name__ == '__main__':
    sys.exit(main())
