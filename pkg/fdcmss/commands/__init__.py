"""The command line commands. Every command module provides ``add_arguments`` to declare its arguments and
``handle`` to run it.
"""
import contextlib
import pathlib
import sys
import typing


@contextlib.contextmanager
def output(path: pathlib.Path | None) -> typing.Iterator[typing.TextIO]:
    """Open the command output: a file, or the standard output when no path is given.

    :param path: The output path.
    :return: The output file.
    """
    if path is None or str(path) == '-':
        yield sys.stdout
    else:
        with path.open('w', newline='') as file:
            yield file
