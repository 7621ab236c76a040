"""Test the exact decayed counts
"""
import math

import numpy as np
import pytest

from fdcmss import models, oracle


def test_item_at_landmark():
    """Test that an item at the landmark counts one.
    """
    exact_counts = oracle.ExactDecayedCounts(models.DecaySpec.exponential(0.99))
    oracle.oracle_process(exact_counts, 4, 0)

    assert exact_counts.total == 1
    assert exact_counts.normalized_total(0) == 1


def test_equal_timestamps():
    """Test that items with equal timestamps have equal counts.
    """
    exact_counts = oracle.ExactDecayedCounts(models.DecaySpec.polynomial(2))
    exact_counts.process(1, 5)
    exact_counts.process(2, 5)

    assert exact_counts.counts[1] == exact_counts.counts[2]


def test_sum_of_counts():
    """Test that the item counts add up to the total in any order.
    """
    rng = np.random.default_rng(5)
    items = rng.integers(0, 50, 1000).tolist()
    for order in (items, items[::-1]):
        exact_counts = oracle.ExactDecayedCounts(models.DecaySpec.exponential(0.995))
        for t, item in enumerate(order, start=1):
            exact_counts.process(item, t)
        assert math.fsum(exact_counts.counts.values()) == pytest.approx(exact_counts.total, rel=1e-9)

    assert len(set(items)) == len(exact_counts)


def test_frequent():
    """Test the exact frequent items.
    """
    exact_counts = oracle.ExactDecayedCounts(models.DecaySpec.exponential(0.99))
    for t in range(1, 101):
        exact_counts.process(t % 2, t)

    assert oracle.oracle_frequent(exact_counts, 0.4, 101).keys() == {0, 1}
    assert oracle.oracle_frequent(exact_counts, 0.99, 101) == {}

    single = oracle.ExactDecayedCounts(models.DecaySpec.exponential(0.99))
    single.process(3, 1)
    assert single.frequent(0.99, 2) == {3: pytest.approx(0.99)}


def test_zero_weight_items():
    """Test that items with zero weight are still seen.
    """
    exact_counts = oracle.ExactDecayedCounts(models.DecaySpec.polynomial(2))
    exact_counts.process(8, 0)

    assert exact_counts.counts == {8: 0}
    assert exact_counts.normalized_counts(3) == {8: 0}


def test_rebase():
    """Test that a rebase keeps the normalized counts.
    """
    exact_counts = oracle.ExactDecayedCounts(models.DecaySpec.exponential(0.99))
    for t in range(1, 500):
        exact_counts.process(t % 7, t)
    before = exact_counts.normalized_counts(600)
    exact_counts.rebase(499)

    assert exact_counts.decay_spec.landmark == 499
    assert exact_counts.normalized_counts(600) == pytest.approx(before, rel=1e-9)
