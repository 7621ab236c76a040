"""The Forward Decay Count-Min Space Saving sketch.

Every cell of a d × w Count-Min grid holds a Space Saving summary with two counters. The raw forward decayed weight
g(t_i - L) of each item is added to the cell it hashes to in every row; the counters keep the majority candidate of
each cell, and the sum of the two counters equals what a plain Count-Min cell would store.
"""
import logging

from fdcmss import decay, enums, exceptions, hashing, models, settings, sizing
from fdcmss.space_saving import SpaceSavingSummary
from .base import FrequentItemsSketch

# The module logger
logger = logging.getLogger(__name__)

# Counters in each cell
CELL_CAPACITY = 2


class FdcmssSketch(FrequentItemsSketch):
    """The FDCMSS sketch
    """
    ALGORITHM = enums.Algorithm.FDCMSS

    def __init__(
            self, params: models.SketchParams, seed: int = settings.DEFAULT_SEED, rows: int | None = None,
            columns: int | None = None, hasher: hashing.RowHasher | None = None
    ):
        """Create an empty sketch. The dimensions follow from ε and δ unless given explicitly, which is how byte
        budgets are honoured.

        :param params: The sketch parameters.
        :param seed: The master seed of the row hash functions.
        :param rows: The number of rows d.
        :param columns: The number of columns w.
        :param hasher: The row hasher, seeded xxh64 by default.
        """
        dimensions = sizing.fdcmss_dimensions(params.epsilon, params.delta)
        self.params = params
        self.seed = seed
        self.rows = dimensions.rows if rows is None else rows
        self.columns = dimensions.columns if columns is None else columns
        if self.rows < 1 or self.columns < 1:
            raise exceptions.ConfigurationError(f"Invalid sketch dimensions {self.rows} × {self.columns}")
        self.hasher = hashing.XxRowHasher(self.rows, self.columns, seed) if hasher is None else hasher
        self.cells = [[SpaceSavingSummary(CELL_CAPACITY) for _ in range(self.columns)] for _ in range(self.rows)]
        self.decay_spec = params.decay
        self.count = 0.0

    @property
    def landmark(self) -> float:
        """Return the current landmark time.

        :return: The landmark.
        """
        return self.decay_spec.landmark

    @property
    def cell_count(self) -> int:
        return self.rows * self.columns

    def cell(self, row: int, column: int) -> SpaceSavingSummary:
        """Return the summary stored in a cell.

        :param row: The row.
        :param column: The column.
        :return: The summary.
        """
        return self.cells[row][column]

    def process(self, item: int, t: float):
        """Process an item of the stream. For exponential decay, the landmark is moved to the item timestamp first when
        its raw weight would exceed the rebase threshold.

        :param item: The item.
        :param t: The item timestamp, not before the landmark.
        """
        if decay.needs_rebase(self.decay_spec, t, settings.REBASE_THRESHOLD):
            self.rebase(t)
        weight = decay.item_weight(self.decay_spec, t, self.params.t_init)
        columns = self.hasher.columns(item)
        # g(0) = 0 for polynomial decay
        if weight == 0:
            return
        self.count += weight
        for row, column in enumerate(columns):
            self.cells[row][column].update(item, weight)

    def normalizer(self, t: float) -> float:
        """Return g(t - L), the value that normalizes raw counts at a query time.

        :param t: The query time.
        :return: The normalizer.
        """
        value = decay.item_weight(self.decay_spec, t, self.params.t_init)
        if value == 0:
            raise exceptions.DecayDomainError(f"Cannot normalize at time {t} where the decay function is zero")

        return value

    def raw_estimate(self, item: int) -> float:
        """Return the unnormalized decayed count estimate of an item: the minimum over the rows of the cell estimates.

        :param item: The item.
        :return: The raw estimate.
        """
        return min(
            self.cells[row][column].estimate(item) for row, column in enumerate(self.hasher.columns(item))
        )

    def point_estimate(self, item: int, t: float) -> float:
        if self.count == 0:
            return 0.0

        return self.raw_estimate(item) / self.normalizer(t)

    def frequent_items(self, normalizer: float) -> list[models.FrequentItem]:
        """Return the frequent items, normalizing the estimates with the given value. The majority candidate of every
        cell is checked against the threshold φ·count, which is compared in the raw domain since both sides share the
        normalizer.

        :param normalizer: The normalizer g(t - L).
        :return: The frequent items.
        """
        threshold = self.params.phi * self.count
        checked = set()
        estimates = {}
        for row in self.cells:
            for cell in row:
                counter = cell.max_counter()
                if counter is None or counter.item in checked or counter.count <= threshold:
                    continue
                checked.add(counter.item)
                estimate = self.raw_estimate(counter.item)
                if estimate > threshold:
                    estimates[counter.item] = estimate / normalizer

        return self.sorted_items(estimates)

    def query(self, t: float) -> list[models.FrequentItem]:
        if self.count == 0:
            return []

        return self.frequent_items(self.normalizer(t))

    def rebase(self, new_landmark: float):
        """Move the landmark forward, scaling every raw count so that normalized values do not change. Only exact for
        exponential decay.

        :param new_landmark: The new landmark, not before the current one.
        """
        factor = decay.rebase_factor(self.decay_spec, new_landmark)
        logger.debug("Rebasing sketch from %s to %s by %s", self.landmark, new_landmark, factor)
        for row in self.cells:
            for cell in row:
                cell.scale(factor)
        self.count *= factor
        self.decay_spec = decay.rebased(self.decay_spec, new_landmark)

    def __repr__(self) -> str:
        return f"FdcmssSketch(rows={self.rows}, columns={self.columns}, count={self.count}, landmark={self.landmark})"


def initialize(params: models.SketchParams, seed: int = settings.DEFAULT_SEED) -> FdcmssSketch:
    """Create an empty FDCMSS sketch sized from the parameters.

    :param params: The sketch parameters.
    :param seed: The master seed of the row hash functions.
    :return: The sketch.
    """
    return FdcmssSketch(params, seed=seed)
