"""Command to generate a synthetic Zipf stream.
"""
import argparse
import logging

from fdcmss import enums, generator, models, settings
from fdcmss.commands import output

# The module logger
logger = logging.getLogger(__name__)


def add_arguments(arg_parser: argparse.ArgumentParser):
    """Add the command arguments.

    :param arg_parser: The command parser.
    """
    arg_parser.add_argument('--n', type=int, default=settings.DEFAULT_N, help="The number of items")
    arg_parser.add_argument('--rho', type=float, default=settings.DEFAULT_RHO, help="The skew of the distribution")
    arg_parser.add_argument('--universe', type=int, default=settings.DEFAULT_UNIVERSE,
                            help="The number of distinct items that can be drawn")


def handle(args: argparse.Namespace) -> enums.ExitCode:
    """Write the stream, one item per line.

    :param args: The command line arguments.
    :return: The exit code.
    """
    spec = models.ZipfSpec(n=args.n, rho=args.rho, universe=args.universe, seed=args.seed)
    stream = generator.zipf_stream(spec)
    with output(args.out) as file:
        generator.write_items(stream, file)
    logger.info("Generated %s items", len(stream))

    return enums.ExitCode.OK
