"""Exact forward decayed counts, kept by brute force as the ground truth of the experiments.
"""
import logging

from fdcmss import decay, exceptions, models, settings

# The module logger
logger = logging.getLogger(__name__)


class ExactDecayedCounts:
    """The raw decayed count of every item seen, plus their total
    """
    def __init__(self, decay_spec: models.DecaySpec):
        """Create an empty oracle.

        :param decay_spec: The decay function.
        """
        self.decay_spec = decay_spec
        self.origin = decay_spec.landmark
        self.counts: dict[int, float] = {}
        self.total = 0.0

    def process(self, item: int, t: float):
        """Add the raw weight of an item. Items arriving with zero weight are still recorded as seen.

        :param item: The item.
        :param t: The item timestamp.
        """
        if decay.needs_rebase(self.decay_spec, t, settings.REBASE_THRESHOLD):
            self.rebase(t)
        weight = decay.item_weight(self.decay_spec, t, self.origin)
        self.counts[item] = self.counts.get(item, 0.0) + weight
        self.total += weight

    def rebase(self, new_landmark: float):
        """Move the landmark of an exponential decay forward.

        :param new_landmark: The new landmark.
        """
        factor = decay.rebase_factor(self.decay_spec, new_landmark)
        logger.debug("Rebasing oracle from %s to %s by %s", self.decay_spec.landmark, new_landmark, factor)
        self.counts = {item: count * factor for item, count in self.counts.items()}
        self.total *= factor
        self.decay_spec = decay.rebased(self.decay_spec, new_landmark)

    def _normalizer(self, t: float) -> float:
        value = decay.item_weight(self.decay_spec, t, self.origin)
        if value == 0:
            raise exceptions.DecayDomainError(f"Cannot normalize at time {t} where the decay function is zero")

        return value

    def normalized_total(self, t: float) -> float:
        """Return the decayed count C of the stream at a time.

        :param t: The time.
        :return: The decayed count.
        """
        return self.total / self._normalizer(t)

    def normalized_counts(self, t: float) -> dict[int, float]:
        """Return the decayed count of every item seen at a time.

        :param t: The time.
        :return: The decayed counts.
        """
        normalizer = self._normalizer(t)

        return {item: count / normalizer for item, count in self.counts.items()}

    def frequent(self, phi: float, t: float) -> dict[int, float]:
        """Return the items whose decayed count is above φC.

        :param phi: The support threshold φ.
        :param t: The time.
        :return: The decayed count of each frequent item.
        """
        threshold = phi * self.total

        return {
            item: count for item, count in self.normalized_counts(t).items() if self.counts[item] > threshold
        }

    def __len__(self) -> int:
        return len(self.counts)


def oracle_process(oracle: ExactDecayedCounts, item: int, t_i: float):
    """Add an item to the oracle.

    :param oracle: The oracle.
    :param item: The item.
    :param t_i: The item timestamp.
    """
    oracle.process(item, t_i)


def oracle_frequent(oracle: ExactDecayedCounts, phi: float, t: float) -> dict[int, float]:
    """Return the exact frequent items.

    :param oracle: The oracle.
    :param phi: The support threshold φ.
    :param t: The time.
    :return: The decayed count of each frequent item.
    """
    return oracle.frequent(phi, t)
