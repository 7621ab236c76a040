"""Command to compute the statistics of an item file.
"""
import argparse
import pathlib

from fdcmss import enums, parser, stats
from fdcmss.commands import output


def add_arguments(arg_parser: argparse.ArgumentParser):
    """Add the command arguments.

    :param arg_parser: The command parser.
    """
    formats = ", ".join(f"{input_format.value} ({input_format.description})" for input_format in enums.InputFormat)
    arg_parser.add_argument('--in', dest='input', type=pathlib.Path, required=True, help="The item file")
    arg_parser.add_argument('--format', type=enums.InputFormat, default=enums.InputFormat.INT_PER_TOKEN,
                            help=f"The item file format. Available formats are {formats}")
    arg_parser.add_argument('--dataset', type=enums.Dataset,
                            help=f"Compare with the published statistics of a dataset. Available datasets are "
                                 f"{','.join(dataset.value for dataset in enums.Dataset)}")


def handle(args: argparse.Namespace) -> enums.ExitCode:
    """Print the statistics as name,value CSV lines.

    :param args: The command line arguments.
    :return: The exit code.
    """
    dataset_stats = stats.dataset_stats(parser.read_items(args.input, args.format).items)
    mismatches = [] if args.dataset is None else stats.compare_reference(dataset_stats, args.dataset)
    with output(args.out) as file:
        file.write("statistic,value\n")
        for name, value in dataset_stats.as_reference().items():
            file.write(f"{name},{format(value, '.10g')}\n")
        if args.dataset is not None:
            file.write(f"mismatches,{';'.join(mismatches)}\n")

    return enums.ExitCode.OK
