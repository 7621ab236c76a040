"""Accuracy and throughput metrics of an experiment run.
"""
from collections.abc import Iterable, Mapping
import logging
import math

import numpy as np

from fdcmss import models

# The module logger
logger = logging.getLogger(__name__)

# The percentile of the absolute errors reported
ERROR_PERCENTILE = 0.96


def percentile_error(errors: np.ndarray, fraction: float = ERROR_PERCENTILE) -> float:
    """Return the error found at position ⌈fraction·M⌉ (1-based) of the ascending sorted errors.

    :param errors: The absolute errors.
    :param fraction: The fraction.
    :return: The error, zero when there are no errors.
    """
    if errors.size == 0:
        return 0.0
    index = max(0, math.ceil(fraction * errors.size) - 1)

    return float(np.sort(errors)[index])


def compute_metrics(
        reported: Iterable[models.FrequentItem], truth: Mapping[int, float], exact: Mapping[int, float],
        estimates: Mapping[int, float], elapsed_ms: float, n_updates: int
) -> models.MetricsReport:
    """Compute the metrics of a run.

    :param reported: The items reported by the sketch.
    :param truth: The exact frequent items.
    :param exact: The exact decayed count of every distinct item of the stream.
    :param estimates: The estimated decayed count of every distinct item of the stream.
    :param elapsed_ms: The time spent processing the stream, in milliseconds.
    :param n_updates: The number of items processed.
    :return: The metrics.
    """
    reported_items = {frequent_item.item for frequent_item in reported}
    hits = len(reported_items & truth.keys())

    recall_defined = bool(truth)
    if recall_defined:
        recall = hits / len(truth)
    else:
        logger.warning("No true frequent items, recall reported as 1")
        recall = 1.0
    precision = hits / len(reported_items) if reported_items else 1.0

    items = list(exact)
    errors = np.abs(
        np.fromiter((estimates[item] for item in items), dtype=np.float64, count=len(items)) -
        np.fromiter((exact[item] for item in items), dtype=np.float64, count=len(items))
    )

    return models.MetricsReport(
        recall=recall,
        precision=precision,
        mean_abs_err=float(errors.mean()) if errors.size else 0.0,
        max_abs_err=float(errors.max()) if errors.size else 0.0,
        p96_abs_err=percentile_error(errors),
        updates_per_ms=n_updates / elapsed_ms if elapsed_ms > 0 else 0.0,
        recall_defined=recall_defined,
    )
