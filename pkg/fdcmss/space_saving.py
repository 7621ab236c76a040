"""Space Saving summary with real valued weighted updates.

FDCMSS keeps a summary with two counters in each sketch cell; larger capacities are supported for validation. Ties
between counters with equal counts are broken in favour of the lower item, both when evicting and when reporting the
maximum, so that replays are deterministic.
"""
import dataclasses
import math


@dataclasses.dataclass(frozen=True, slots=True)
class Counter:
    """A Space Saving counter. An unoccupied counter has a zero count.
    """
    item: int
    count: float
    occupied: bool


class SpaceSavingSummary:
    """Fixed capacity Space Saving summary
    """
    __slots__ = ('capacity', 'items', 'counts', 'offered_total')

    def __init__(self, capacity: int = 2):
        """Create an empty summary.

        :param capacity: The number of counters, at least 2.
        """
        if capacity < 2:
            raise ValueError(f"A summary needs at least 2 counters, got {capacity}")
        self.capacity = capacity
        self.items: list[int | None] = [None] * capacity
        self.counts: list[float] = [0.0] * capacity
        self.offered_total = 0.0

    def update(self, item: int, weight: float):
        """Offer a weighted occurrence of an item to the summary.

        :param item: The item.
        :param weight: The weight, positive and finite.
        """
        if not weight > 0 or not math.isfinite(weight):
            raise ValueError(f"Weights must be positive and finite, got {weight}")
        self.offered_total += weight
        items = self.items
        counts = self.counts

        free = None
        victim = None
        for index in range(self.capacity):
            monitored = items[index]
            if monitored == item:
                counts[index] += weight
                return
            if monitored is None:
                if free is None:
                    free = index
            elif victim is None or counts[index] < counts[victim] or (
                    counts[index] == counts[victim] and monitored < items[victim]):
                victim = index

        if free is not None:
            items[free] = item
            counts[free] = weight
        else:
            items[victim] = item
            counts[victim] += weight

    def minimum(self) -> float:
        """Return the minimum count, zero when a counter is unoccupied.

        :return: The minimum count.
        """
        if None in self.items:
            return 0.0

        return min(self.counts)

    def max_counter(self) -> Counter | None:
        """Return the occupied counter with the maximum count.

        :return: The counter, or None when the summary is empty.
        """
        best = None
        for item, count in zip(self.items, self.counts):
            if item is not None and (best is None or count > best[1] or (count == best[1] and item < best[0])):
                best = (item, count)

        return None if best is None else Counter(item=best[0], count=best[1], occupied=True)

    def estimate(self, item: int) -> float:
        """Return the estimated count of an item: its counter if monitored, the minimum count otherwise.

        :param item: The item.
        :return: The estimated count.
        """
        for monitored, count in zip(self.items, self.counts):
            if monitored == item:
                return count

        return self.minimum()

    def counters(self) -> list[Counter]:
        """Return all the counters.

        :return: The counters, in storage order.
        """
        return [
            Counter(item=0 if item is None else item, count=count, occupied=item is not None)
            for item, count in zip(self.items, self.counts)
        ]

    def scale(self, factor: float):
        """Multiply every count by a positive factor.

        :param factor: The factor.
        """
        self.counts = [count * factor for count in self.counts]
        self.offered_total *= factor

    def __len__(self) -> int:
        return sum(item is not None for item in self.items)

    def __repr__(self) -> str:
        return f"SpaceSavingSummary({[(c.item, c.count) for c in self.counters() if c.occupied]})"


def ss_update(summary: SpaceSavingSummary, item: int, weight: float):
    """Offer a weighted occurrence of an item to a summary.

    :param summary: The summary.
    :param item: The item.
    :param weight: The weight.
    """
    summary.update(item, weight)


def ss_min(summary: SpaceSavingSummary) -> float:
    """Return the minimum count of a summary.

    :param summary: The summary.
    :return: The minimum count.
    """
    return summary.minimum()


def ss_max_counter(summary: SpaceSavingSummary) -> Counter | None:
    """Return the counter with the maximum count of a summary.

    :param summary: The summary.
    :return: The counter, or None when empty.
    """
    return summary.max_counter()


def ss_estimate(summary: SpaceSavingSummary, item: int) -> float:
    """Return the estimated count of an item in a summary.

    :param summary: The summary.
    :param item: The item.
    :return: The estimated count.
    """
    return summary.estimate(item)
