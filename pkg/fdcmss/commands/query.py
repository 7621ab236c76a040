"""Command to query a sketch snapshot.
"""
import argparse
import pathlib

from fdcmss import enums, snapshot
from fdcmss.commands import output


def add_arguments(arg_parser: argparse.ArgumentParser):
    """Add the command arguments.

    :param arg_parser: The command parser.
    """
    arg_parser.add_argument('--snapshot', type=pathlib.Path, required=True, help="The sketch snapshot")
    arg_parser.add_argument('--t', type=float, required=True, help="The query time")
    arg_parser.add_argument('--phi', type=float, help="The support threshold, the one of the sketch when not given")


def handle(args: argparse.Namespace) -> enums.ExitCode:
    """Print the frequent items as item,estimate CSV lines, by descending estimate.

    :param args: The command line arguments.
    :return: The exit code.
    """
    sketch = snapshot.load(args.snapshot)
    if args.phi is not None:
        sketch.params = sketch.params.model_validate(sketch.params.model_dump() | {'phi': args.phi})
    with output(args.out) as file:
        file.write("item,estimate\n")
        for frequent_item in sketch.query(args.t):
            file.write(f"{frequent_item.item},{format(frequent_item.estimate, '.10g')}\n")

    return enums.ExitCode.OK
