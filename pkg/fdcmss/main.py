"""The command line entry point.
"""
import argparse
import importlib
import logging
import pathlib
import sys

import pydantic

from fdcmss import __version__, enums, exceptions, settings

# The module logger
logger = logging.getLogger(__name__)

# The commands and their descriptions
COMMANDS = {
    'gen': "Generate a synthetic Zipf stream",
    'stats': "Compute the statistics of an item file",
    'run': "Run an experiment and write one CSV row for each run and algorithm",
    'sizing': "Print the theoretical sketch sizes of both algorithms",
    'query': "Query a sketch snapshot",
}


def create_parser() -> argparse.ArgumentParser:
    """Create the command line parser.

    :return: The parser.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--seed', type=int, default=settings.DEFAULT_SEED, help="The master seed")
    common.add_argument('--jobs', type=int, default=settings.JOBS, help="The maximum number of parallel runs")
    common.add_argument('--out', type=pathlib.Path, help="The output file. By default, the standard output is used")
    common.add_argument('--verbose', default=False, action="store_true", help="Verbose logging")

    arg_parser = argparse.ArgumentParser(prog='fdcmss', description="Forward decay frequent items sketches")
    arg_parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    subparsers = arg_parser.add_subparsers(dest='command', required=True)
    for name, description in COMMANDS.items():
        command_parser = subparsers.add_parser(name, parents=[common], help=description, description=description)
        command = importlib.import_module(f'fdcmss.commands.{name}')
        command.add_arguments(command_parser)
        command_parser.set_defaults(handle=command.handle)

    return arg_parser


def main(argv: list[str] | None = None) -> int:
    """Parse the arguments and run the command.

    :param argv: The command line arguments, the process arguments when not given.
    :return: The exit code.
    """
    args = create_parser().parse_args(argv)
    logging.basicConfig(format=settings.LOG_FORMAT, level=logging.INFO if args.verbose else logging.WARNING)

    try:
        return args.handle(args)
    except (exceptions.InputError, OSError) as ex:
        logger.error("Input error: %s", ex)
        return enums.ExitCode.INPUT_ERROR
    except (exceptions.FdcmssError, pydantic.ValidationError, ValueError) as ex:
        logger.error("Configuration error: %s", ex)
        return enums.ExitCode.CONFIGURATION_ERROR


if __name__ == '__main__':
    sys.exit(main())
