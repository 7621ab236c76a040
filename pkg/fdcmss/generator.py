"""Seeded synthetic Zipf streams.

Items are drawn from [1, universe] with P(i) ∝ i^-ρ by inverse transform sampling: a binary search of uniform draws
in the precomputed cumulative distribution. The timestamp of an item is its 1-based position in the stream.
"""
from collections.abc import Iterator
import dataclasses
import logging
import typing

import numpy as np

from fdcmss import caching, models

# The module logger
logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class Stream:
    """A stream of 32 bit unsigned items, timestamped by their 1-based position
    """
    items: np.ndarray

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        for position, item in enumerate(self.items.tolist(), start=1):
            yield item, position

    def head(self, n: int) -> 'Stream':
        """Return the first items of the stream.

        :param n: The number of items.
        :return: The stream prefix.
        """
        return Stream(items=self.items[:n])

    @property
    def final_timestamp(self) -> int:
        """Return the timestamp of the last item, zero for an empty stream.

        :return: The timestamp.
        """
        return len(self.items)


@caching.cache
def zipf_cdf(universe: int, rho: float) -> np.ndarray:
    """Return the cumulative Zipf distribution over [1, universe].

    :param universe: The number of items.
    :param rho: The skew.
    :return: The cumulative probabilities, the last one exactly 1.
    """
    weights = np.arange(1, universe + 1, dtype=np.float64) ** -rho
    cdf = np.cumsum(weights)
    cdf /= cdf[-1]
    cdf[-1] = 1.0

    return cdf


def zipf_stream(spec: models.ZipfSpec) -> Stream:
    """Draw a Zipf stream. The same specification always gives the same stream.

    :param spec: The stream specification.
    :return: The stream.
    """
    logger.debug("Drawing %s items with skew %s over %s items", spec.n, spec.rho, spec.universe)
    cdf = zipf_cdf(spec.universe, spec.rho)
    draws = np.random.default_rng(spec.seed).random(spec.n)
    indexes = np.minimum(np.searchsorted(cdf, draws, side='right'), spec.universe - 1)

    return Stream(items=(indexes + 1).astype(np.uint32))


def write_items(stream: Stream, file: typing.TextIO):
    """Write a stream in the item file format, one item per line.

    :param stream: The stream.
    :param file: The file.
    """
    for item in stream.items.tolist():
        file.write(f"{item}\n")
