"""Test the λ-HCount sketch
"""
import numpy as np
import pytest

from fdcmss import enums, exceptions, generator, models, oracle
from fdcmss.sketch import get_sketch_class
from fdcmss.sketch.lambda_hcount import LambdaHCount, lh_query, lh_update
from fdcmss.tests import factories


def test_factory():
    """Test that the sketch class is found from the algorithm.
    """
    assert get_sketch_class(enums.Algorithm.LAMBDA_HCOUNT) is LambdaHCount


def test_update_rule():
    """Test that an entry is aged before it is incremented.
    """
    sketch = LambdaHCount(factories.LambdaHCountParamsFactory(rows=1, columns=1))
    sketch.densities[0][0] = 10
    sketch.stamps[0][0] = 100
    lh_update(sketch, 4, 110)

    assert sketch.entry(0, 0).density == pytest.approx(10.0438, abs=1e-4)
    assert sketch.entry(0, 0).last_update == 110


def test_fresh_entry():
    """Test that the first update of an entry sets its density to one.
    """
    sketch = LambdaHCount(factories.LambdaHCountParamsFactory())
    lh_update(sketch, 4, 1000)

    for row, column in enumerate(sketch.hasher.columns(4)):
        assert sketch.entry(row, column).density == 1


def test_constant_stream():
    """Test that the density of a constant stream converges to 1/(1 - λ) without exceeding it.
    """
    sketch = LambdaHCount(factories.LambdaHCountParamsFactory())
    for t in range(1, 2001):
        sketch.process(7, t)

    assert sketch.point_estimate(7, 2000) == pytest.approx(100, abs=0.1)
    assert max(max(row) for row in sketch.densities) <= 1 / (1 - 0.99) + 1e-9
    assert sketch.total_count(2000) == pytest.approx(100, abs=0.1)
    assert [frequent_item.item for frequent_item in lh_query(sketch, 2000)] == [7]


def test_out_of_order():
    """Test that decreasing timestamps are rejected.
    """
    sketch = LambdaHCount(factories.LambdaHCountParamsFactory())
    sketch.process(1, 10)

    with pytest.raises(exceptions.OutOfOrderError):
        sketch.process(2, 9)
    with pytest.raises(exceptions.OutOfOrderError):
        sketch.query(5)


def test_empty_query():
    """Test that nothing is reported before any item is a candidate.
    """
    sketch = LambdaHCount(factories.LambdaHCountParamsFactory(support=0.5, epsilon=0.01))
    assert sketch.query(1) == []

    sketch.process(1, 1)
    assert not sketch.candidates
    assert sketch.query(2) == []


def test_candidate_capacity():
    """Test the size of the candidate queue and the eviction of its head.
    """
    sketch = LambdaHCount(factories.LambdaHCountParamsFactory(rows=3, support=0.5, epsilon=0.25))
    assert sketch.capacity == 12

    sketch.capacity = 2
    sketch.insert_threshold = 0
    for t, item in enumerate((1, 2, 1, 3), start=1):
        sketch.process(item, t)

    assert list(sketch.candidates) == [1, 3]
    assert sketch.candidates == {1: 3, 3: 4}


def test_majority_item():
    """Test that an item holding most of the decayed count is reported.
    """
    rng = np.random.default_rng(3)
    sketch = LambdaHCount(factories.LambdaHCountParamsFactory(support=0.3, epsilon=0.01))
    for t in range(1, 10_001):
        sketch.process(1 if t % 2 else int(rng.integers(2, 1000)), t)

    reported = lh_query(sketch, 10_001)
    assert [frequent_item.item for frequent_item in reported] == [1]
    assert reported[0].estimate >= sketch.point_estimate(1, 10_001) * (1 - 1e-12)


def test_memory():
    """Test the memory accounting.
    """
    sketch = LambdaHCount(factories.LambdaHCountParamsFactory(rows=4, columns=10))

    assert sketch.memory_bytes == 16 * 40


def test_no_false_negatives():
    """Test that every item whose exact decayed count exceeds s/(1 - λ) is reported, and that the estimates never
    fall below the exact counts.
    """
    params = models.LambdaHCountParams(lam=0.99, support=0.05, epsilon=0.001, rows=3, columns=500)
    for seed in range(20):
        stream = generator.zipf_stream(factories.ZipfSpecFactory(seed=seed))
        sketch = LambdaHCount(params, seed=seed)
        exact_counts = oracle.ExactDecayedCounts(models.DecaySpec.exponential(params.lam))
        for item, t in stream:
            sketch.process(item, t)
            exact_counts.process(item, t)

        query_time = stream.final_timestamp + 1
        reported = {frequent_item.item for frequent_item in sketch.query(query_time)}
        exact = exact_counts.normalized_counts(query_time)
        for item, count in exact.items():
            if count > params.support / (1 - params.lam):
                assert item in reported
        for item in list(exact)[:500]:
            assert sketch.point_estimate(item, query_time) >= exact[item] * (1 - 1e-9)
