"""Base module for frequent items sketches
"""
import abc
import importlib

from fdcmss import enums, models

# The sketch class for each algorithm
_SKETCH_CLASSES = {
    enums.Algorithm.FDCMSS: 'fdcmss.sketch.fdcmss.FdcmssSketch',
    enums.Algorithm.LAMBDA_HCOUNT: 'fdcmss.sketch.lambda_hcount.LambdaHCount',
}


def get_sketch_class(algorithm: enums.Algorithm) -> type['FrequentItemsSketch']:
    """Get the sketch class that implements an algorithm.

    :param algorithm: The algorithm.
    :return: The sketch class.
    """
    module_name, class_name = _SKETCH_CLASSES[algorithm].rsplit('.', 1)

    return getattr(importlib.import_module(module_name), class_name)


class FrequentItemsSketch(abc.ABC):
    """The abstract base class for the frequent items sketches.
    """
    # The algorithm implemented
    ALGORITHM: enums.Algorithm

    @property
    @abc.abstractmethod
    def cell_count(self) -> int:
        """Return the number of cells of the sketch.

        :return: The number of cells.
        """
        raise NotImplementedError()

    @property
    def memory_bytes(self) -> int:
        """Return the sketch size in bytes.

        :return: The sketch size.
        """
        return self.cell_count * self.ALGORITHM.bytes_per_cell

    @abc.abstractmethod
    def process(self, item: int, t: float):
        """Process an item of the stream.

        :param item: The item.
        :param t: The item timestamp.
        """
        raise NotImplementedError()

    @abc.abstractmethod
    def query(self, t: float) -> list[models.FrequentItem]:
        """Return the frequent items at a query time.

        :param t: The query time.
        :return: The frequent items, by descending estimate.
        """
        raise NotImplementedError()

    @abc.abstractmethod
    def point_estimate(self, item: int, t: float) -> float:
        """Return the estimated decayed count of an item at a query time.

        :param item: The item.
        :param t: The query time.
        :return: The estimated decayed count.
        """
        raise NotImplementedError()

    @staticmethod
    def sorted_items(estimates: dict[int, float]) -> list[models.FrequentItem]:
        """Sort the frequent items by descending estimate, then by item.

        :param estimates: The estimate of each item.
        :return: The sorted frequent items.
        """
        return [
            models.FrequentItem(item=item, estimate=estimate)
            for item, estimate in sorted(estimates.items(), key=lambda x: (-x[1], x[0]))
        ]
