"""Dataset statistics, and their comparison with the published statistics of the public datasets.
"""
import logging
import math

import numpy as np

from fdcmss import enums, exceptions, models

# The module logger
logger = logging.getLogger(__name__)

# Statistics that must match the reference exactly
_EXACT_STATISTICS = ('count', 'distinct', 'min', 'max')

# Absolute tolerance for the statistics printed with one decimal
_ABSOLUTE_TOLERANCE = 0.1

# Relative tolerance for the statistics printed as rounded integers
_RELATIVE_TOLERANCE = 1e-3


def dataset_stats(items: np.ndarray) -> models.DatasetStats:
    """Compute the statistics of a sequence of items. Standard deviation and skewness are in population form.

    :param items: The items.
    :return: The statistics.
    """
    if len(items) == 0:
        raise exceptions.InputError("Cannot compute the statistics of an empty dataset")
    values = np.asarray(items, dtype=np.float64)
    mean = values.mean()
    stddev = values.std()
    skewness = float(np.mean((values - mean) ** 3) / stddev ** 3) if stddev > 0 else 0.0

    return models.DatasetStats(
        count=len(values),
        distinct=len(np.unique(values)),
        minimum=float(values.min()),
        maximum=float(values.max()),
        mean=float(mean),
        median=float(np.median(values)),
        stddev=float(stddev),
        skewness=skewness,
    )


def compare_reference(stats: models.DatasetStats, dataset: enums.Dataset) -> list[str]:
    """Compare statistics with the published statistics of a dataset.

    :param stats: The computed statistics.
    :param dataset: The dataset.
    :return: The names of the statistics that do not match.
    """
    mismatches = []
    for name, value in stats.as_reference().items():
        reference = dataset.reference[name]
        if name in _EXACT_STATISTICS:
            matches = value == reference
        else:
            matches = math.isclose(value, reference, rel_tol=_RELATIVE_TOLERANCE, abs_tol=_ABSOLUTE_TOLERANCE)
        if not matches:
            logger.warning("%s %s is %s, the published value is %s", dataset.description, name, value, reference)
            mismatches.append(name)

    return mismatches
