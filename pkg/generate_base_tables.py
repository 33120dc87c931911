"""
This script regenerates the Version B base-case tables shipped in oooooob/data/.
"""
import argparse

from oooooob.classifiers.base_tables import TABLE_SIZES, write_table
from oooooob.models.memo import MemoTable
from oooooob.utilities.utils import setup_logging


def generate_base_tables():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, action="append", choices=TABLE_SIZES,
                        help="Largest pile size of the table (default: all)")
    parser.add_argument("--verbose", action="store_true",
                        help="Log progress (default: False)")
    args = parser.parse_args()

    setup_logging(1 if args.verbose else 0)
    memo = MemoTable()
    for n in args.n or TABLE_SIZES:
        path = write_table(n, memo=memo)
        print(f'Wrote {path}')


if __name__ == "__main__":
    generate_base_tables()
