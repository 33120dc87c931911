import argparse

from oooooob.models.position import Variant
from oooooob.utilities.loaders import PROFILES
from oooooob.utilities.utils import parse_position
from oooooob.verify.grids import GRID_KINDS
from oooooob.verify.regions import parse_region


def _position(text):
    try:
        return parse_position(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _variant(text):
    try:
        return Variant.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _region(text):
    try:
        return parse_region(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _common_arguments():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0,
                        help="Log progress to stderr (-v info, -vv debug)")
    common.add_argument("--output", default=None,
                        help="Write the document to this file instead of stdout")
    common.add_argument("--max-states", dest="max_states", default=None, type=int,
                        help="Solver states before giving up (default: $OOOOOOB_MAX_STATES, "
                             "then the profile, then 10,000,000)")
    return common


def _sweep_arguments():
    sweep = argparse.ArgumentParser(add_help=False)
    sweep.add_argument("--profile", default="default", choices=PROFILES,
                       help="Packaged sweep profile (default: default)")
    sweep.add_argument("--config", default=None,
                       help="Path to a sweep profile yaml, overrides --profile")
    sweep.add_argument("--workers", default=None, type=int,
                       help="Worker processes per sweep (default: the profile, 0 for one per core)")
    sweep.add_argument("--format", default="text", choices=("text", "json", "csv"),
                       help="Report format (default: text)")
    return sweep


def arg_parser():
    common = _common_arguments()
    parser = argparse.ArgumentParser(
        prog="oooooob",
        description="Solve, classify and verify the multi-pile versions of OOOOOOB")
    commands = parser.add_subparsers(dest="command", metavar="command")
    commands.required = True

    outcome = commands.add_parser("outcome", parents=[common],
                                  help="Print the outcome class of a position")
    best_move = commands.add_parser("best-move", parents=[common],
                                    help="Print a move to a P-position, or none")
    for p in (outcome, best_move):
        p.add_argument("--variant", required=True, type=_variant, help="A, B or C")
        p.add_argument("--position", required=True, type=_position,
                       help='Comma separated pile sizes, e.g. "2,3,3,3"')
        p.add_argument("--format", default="text", choices=("text", "json"))

    classify = commands.add_parser("classify", parents=[common],
                                   help="Print every closed-form rule that decides a position")
    classify.add_argument("--position", required=True, type=_position,
                          help='Comma separated pile sizes, e.g. "2,3,3,3"')
    classify.add_argument("--variant", default=None, type=_variant,
                          help="Restrict to one variant (default: all three)")
    classify.add_argument("--format", default="text", choices=("text", "json", "csv"))

    sweep = _sweep_arguments()
    verify = commands.add_parser("verify", parents=[common, sweep],
                                 help="Compare a rule with the search oracle over its sweeps")
    verify.add_argument("--lemma", required=True,
                        help="Classifier, reduction or check id, e.g. b_k_piles")
    commands.add_parser("conjectures", parents=[common, sweep],
                        help="Run the three conjecture sweeps")

    enumerate_ = commands.add_parser("enumerate", parents=[common],
                                     help="Stream the positions of a region")
    enumerate_.add_argument("--region", required=True, type=_region,
                            help="pile-count:K:MAX[:MIN], counts:B1,B2,... or ones-big:K:N")
    enumerate_.add_argument("--format", default="text", choices=("text", "json", "csv"))

    solve = commands.add_parser("solve", parents=[common],
                                help="Solve every position of a region")
    solve.add_argument("--variant", required=True, type=_variant, help="A, B or C")
    solve.add_argument("--region", required=True, type=_region,
                       help="pile-count:K:MAX[:MIN], counts:B1,B2,... or ones-big:K:N")
    solve.add_argument("--format", default="csv", choices=("csv", "jsonl"))

    grid = commands.add_parser("grid", parents=[common],
                               help="Print a Version C outcome grid")
    grid.add_argument("--kind", required=True, choices=GRID_KINDS)
    grid.add_argument("--max-n", dest="max_n", default=6, type=int,
                      help="ones-big: largest big pile (default: 6)")
    grid.add_argument("--max-k", dest="max_k", default=12, type=int,
                      help="ones-big: most piles of size 1 (default: 12)")
    grid.add_argument("--max-a1", dest="max_a1", default=6, type=int)
    grid.add_argument("--max-a2", dest="max_a2", default=6, type=int)
    grid.add_argument("--max-a3", dest="max_a3", default=5, type=int)
    grid.add_argument("--legend", action="store_true",
                      help="small-piles json: name the rule behind each marked cell")
    grid.add_argument("--format", default="ascii", choices=("ascii", "csv", "json"))

    tables = commands.add_parser("tables",
                                 help="Regenerate the Version B base-case tables")
    tables.add_argument("--n", dest="sizes", type=int, action="append", choices=(4, 5),
                        help="Largest pile size of the table (repeatable, default: both)")
    tables.add_argument("-v", "--verbose", action="count", default=0)
    tables.add_argument("--output", default=None,
                        help="Directory for the tables (default: the packaged data directory)")

    return parser
