"""The λ-HCount sketch.

A backward exponential decay sketch: each of the r × m entries keeps a decayed density and the time of its last
update, and is aged lazily by λ^Δt when touched. Items whose estimate exceeds (s - ε)/(1 - λ) are kept in a bounded,
insertion ordered candidate queue.
"""
import dataclasses
import logging
import math

from fdcmss import enums, exceptions, hashing, models, settings
from .base import FrequentItemsSketch

# The module logger
logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True, slots=True)
class LHEntry:
    """A sketch entry: the decayed density and the time it was last updated.
    """
    density: float
    last_update: float


class LambdaHCount(FrequentItemsSketch):
    """The λ-HCount sketch
    """
    ALGORITHM = enums.Algorithm.LAMBDA_HCOUNT

    def __init__(
            self, params: models.LambdaHCountParams, seed: int = settings.DEFAULT_SEED,
            hasher: hashing.RowHasher | None = None
    ):
        """Create an empty sketch.

        :param params: The sketch parameters.
        :param seed: The master seed of the row hash functions.
        :param hasher: The row hasher, seeded FNV-1a by default.
        """
        self.params = params
        self.seed = seed
        self.rows = params.rows
        self.columns = params.columns
        self.hasher = hashing.FnvRowHasher(self.rows, self.columns, seed) if hasher is None else hasher
        self.densities = [[0.0] * self.columns for _ in range(self.rows)]
        self.stamps = [[0.0] * self.columns for _ in range(self.rows)]
        self.capacity = math.ceil(self.rows / (params.support - params.epsilon))
        # Insertion ordered, each item with the time it was last refreshed
        self.candidates: dict[int, float] = {}
        self.insert_threshold = (params.support - params.epsilon) / (1 - params.lam)
        self.total = 0.0
        self.time: float | None = None

    @property
    def cell_count(self) -> int:
        return self.rows * self.columns

    def entry(self, row: int, column: int) -> LHEntry:
        """Return a sketch entry.

        :param row: The row.
        :param column: The column.
        :return: The entry.
        """
        return LHEntry(density=self.densities[row][column], last_update=self.stamps[row][column])

    def _check_time(self, t: float):
        """Check that time does not go backwards.

        :param t: The time.
        """
        if self.time is not None and t < self.time:
            raise exceptions.OutOfOrderError(f"Time {t} precedes the last update time {self.time}")

    def _aged(self, density: float, stamp: float, t: float) -> float:
        """Age a density from the time it was stored to a later time.

        :param density: The density.
        :param stamp: The time the density was stored.
        :param t: The time.
        :return: The aged density.
        """
        if density == 0:
            return 0.0

        return density * math.pow(self.params.lam, t - stamp)

    def process(self, item: int, t: float):
        """Age the entries the item maps to, add one to each of them and refresh the item in the candidate queue when
        its estimate is high enough.

        :param item: The item.
        :param t: The item timestamp, not before the previous one.
        """
        self._check_time(t)
        columns = self.hasher.columns(item)
        self.total = 1.0 if self.time is None else self.total * math.pow(self.params.lam, t - self.time) + 1
        self.time = t

        estimate = math.inf
        for row, column in enumerate(columns):
            density = self._aged(self.densities[row][column], self.stamps[row][column], t) + 1
            self.densities[row][column] = density
            self.stamps[row][column] = t
            estimate = min(estimate, density)

        if estimate > self.insert_threshold:
            if self.candidates.pop(item, None) is None and len(self.candidates) >= self.capacity:
                evicted = next(iter(self.candidates))
                refreshed = self.candidates.pop(evicted)
                logger.debug("Evicted candidate %s, last refreshed at %s", evicted, refreshed)
            self.candidates[item] = t

    def total_count(self, t: float) -> float:
        """Return the decayed count of the whole stream at a time.

        :param t: The time.
        :return: The decayed count.
        """
        if self.time is None:
            return 0.0
        self._check_time(t)

        return self.total * math.pow(self.params.lam, t - self.time)

    def point_estimate(self, item: int, t: float) -> float:
        self._check_time(t)

        return min(
            self._aged(self.densities[row][column], self.stamps[row][column], t)
            for row, column in enumerate(self.hasher.columns(item))
        )

    def query(self, t: float) -> list[models.FrequentItem]:
        """Return the candidates whose aged estimate is above s times the decayed count of the stream.

        :param t: The query time.
        :return: The frequent items.
        """
        if not self.candidates:
            return []
        threshold = self.params.support * self.total_count(t)
        estimates = {}
        for item in self.candidates:
            estimate = self.point_estimate(item, t)
            if estimate > threshold:
                estimates[item] = estimate

        return self.sorted_items(estimates)

    def __repr__(self) -> str:
        return f"LambdaHCount(rows={self.rows}, columns={self.columns}, candidates={len(self.candidates)})"


def lh_update(state: LambdaHCount, x: int, t: float):
    """Process an item.

    :param state: The sketch.
    :param x: The item.
    :param t: The item timestamp.
    """
    state.process(x, t)


def lh_query(state: LambdaHCount, t: float) -> list[models.FrequentItem]:
    """Return the frequent items.

    :param state: The sketch.
    :param t: The query time.
    :return: The frequent items.
    """
    return state.query(t)
