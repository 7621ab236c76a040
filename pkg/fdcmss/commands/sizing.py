"""Command to print the theoretical sketch sizes of both algorithms.
"""
import argparse

from fdcmss import enums, experiment, models, settings, sizing
from fdcmss.commands import output


def add_arguments(arg_parser: argparse.ArgumentParser):
    """Add the command arguments.

    :param arg_parser: The command parser.
    """
    variables = ", ".join(f"{variable.value} ({variable.description})" for variable in enums.SizingVariable)
    arg_parser.add_argument('--variable', type=enums.SizingVariable, default=enums.SizingVariable.PROBABILITY,
                            help=f"The variable to change. Available variables are {variables}")
    arg_parser.add_argument('--start', type=float, help="The first value, the variable default when not given")
    arg_parser.add_argument('--end', type=float, help="The last value, the variable default when not given")
    arg_parser.add_argument('--steps', type=int, default=30, help="The number of values")
    arg_parser.add_argument('--lambda', dest='lam', type=float, default=settings.DEFAULT_LAMBDA,
                            help="The fading factor")
    arg_parser.add_argument('--distinct', type=int, default=settings.DEFAULT_UNIVERSE,
                            help="The number of distinct items")
    arg_parser.add_argument('--prob', type=float, default=settings.DEFAULT_PROBABILITY,
                            help="The success probability, when the error changes")
    arg_parser.add_argument('--epsilon', type=float, default=settings.DEFAULT_EPSILON,
                            help="The error bound, when the probability changes")


def handle(args: argparse.Namespace) -> enums.ExitCode:
    """Print the sizing table as CSV.

    :param args: The command line arguments.
    :return: The exit code.
    """
    start, end = args.variable.default_range
    values = sizing.value_range(
        start if args.start is None else args.start, end if args.end is None else args.end, args.steps)
    rows = sizing.sizing_table(args.variable, values, args.lam, args.distinct, args.prob, args.epsilon)
    with output(args.out) as file:
        experiment.write_csv(rows, file, models.SizingRow)

    return enums.ExitCode.OK
