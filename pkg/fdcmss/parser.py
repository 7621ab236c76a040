"""Module for parsing item files
"""
import abc
from collections.abc import Iterator
import logging
import pathlib
import typing

import numpy as np

from fdcmss import enums, exceptions
from fdcmss.generator import Stream

# The module logger
logger = logging.getLogger(__name__)

# The largest 32 bit unsigned item
MAX_ITEM = 2 ** 32 - 1


class Parser(abc.ABC):
    """Class to parse item files
    """
    @staticmethod
    def get(input_format: enums.InputFormat) -> 'Parser':
        """Get the parser for a file format.

        :param input_format: The file format.
        :return: The parser.
        """
        match input_format:
            case enums.InputFormat.INT_PER_TOKEN:
                return IntPerTokenParser()
            case _:
                raise NotImplementedError()

    @abc.abstractmethod
    def parse(self, file: typing.TextIO) -> Iterator[int]:
        """Parse the items of a file, in file order.

        :param file: The file.
        :return: The items.
        """
        raise NotImplementedError()

    def read(self, path: pathlib.Path) -> Stream:
        """Read a whole item file.

        :param path: The file path.
        :return: The stream.
        """
        logger.debug("Parsing file %s", path)
        with path.open() as file:
            items = np.fromiter(self.parse(file), dtype=np.uint32)
        logger.info("Read %s items from %s", len(items), path)

        return Stream(items=items)


class IntPerTokenParser(Parser):
    """Parser for files of whitespace separated non negative integers. Transaction lines are flattened.
    """
    def parse(self, file: typing.TextIO) -> Iterator[int]:
        for line_number, line in enumerate(file, start=1):
            for token in line.split():
                try:
                    item = int(token)
                except ValueError as ex:
                    logger.error("Invalid item %r at line %s", token, line_number)
                    raise exceptions.InputParseError(f"Invalid item {token!r}", line=line_number) from ex
                if not 0 <= item <= MAX_ITEM:
                    logger.error("Item %s out of range at line %s", item, line_number)
                    raise exceptions.InputParseError(
                        f"Item {item} is not a 32 bit unsigned integer", line=line_number)
                yield item


def read_items(path: pathlib.Path, input_format: enums.InputFormat = enums.InputFormat.INT_PER_TOKEN) -> Stream:
    """Read the items of a file.

    :param path: The file path.
    :param input_format: The file format.
    :return: The stream, timestamped by position.
    """
    return Parser.get(input_format).read(path)
