"""Test the forward decay functions
"""
import math

import numpy as np
import pytest

from fdcmss import decay, exceptions, models


def test_raw_weight():
    """Test the raw weights.
    """
    assert decay.raw_weight(models.DecaySpec.exponential(0.999), 1001) == pytest.approx(2.72, abs=0.01)
    assert decay.raw_weight(models.DecaySpec.exponential(0.5, landmark=3), 3) == 1
    assert decay.raw_weight(models.DecaySpec.polynomial(2, landmark=3), 3) == 0
    assert decay.raw_weight(models.DecaySpec.polynomial(2), 5) == pytest.approx(25)

    spec = models.DecaySpec.exponential(0.99)
    assert decay.raw_weight(spec, 100) / decay.raw_weight(spec, 110) == pytest.approx(0.904382, abs=1e-6)


def test_raw_weight_errors():
    """Test the raw weights outside the domain of the decay function.
    """
    with pytest.raises(exceptions.DecayDomainError):
        decay.raw_weight(models.DecaySpec.exponential(0.99, landmark=10), 9)
    with pytest.raises(exceptions.DecayOverflowError):
        decay.raw_weight(models.DecaySpec.exponential(0.99), 100_000)


def test_invalid_parameters():
    """Test that the decay parameters are validated.
    """
    for lam in (0, 1, 1.5):
        with pytest.raises(ValueError):
            models.DecaySpec.exponential(lam)
    with pytest.raises(ValueError):
        models.DecaySpec.polynomial(0)


def test_item_weight():
    """Test the weight of items between the initial landmark and a rebased one.
    """
    spec = models.DecaySpec.exponential(0.99, landmark=100)

    assert decay.item_weight(spec, 99, 0) == pytest.approx(0.99)
    assert decay.item_weight(spec, 102, 0) == pytest.approx(0.99 ** -2)
    assert decay.item_weight(models.DecaySpec.polynomial(2), 3, 0) == pytest.approx(9)

    with pytest.raises(exceptions.DecayDomainError):
        decay.item_weight(spec, -1, 0)
    with pytest.raises(exceptions.DecayDomainError):
        decay.item_weight(models.DecaySpec.polynomial(2, landmark=5), 4, 0)


def test_normalized_weight():
    """Test the normalized weights.
    """
    assert decay.normalized_weight(models.DecaySpec.polynomial(2), 7, 7) == 1
    assert decay.normalized_weight(models.DecaySpec.polynomial(2), 5, 10) == pytest.approx(0.25)
    assert decay.normalized_weight(models.DecaySpec.exponential(0.999), 1001, 1003) == pytest.approx(0.999 ** 2)

    with pytest.raises(exceptions.DecayDomainError):
        decay.normalized_weight(models.DecaySpec.polynomial(2), 10, 5)


def test_exponential_equivalence():
    """Test that forward exponential decay coincides with backward exponential decay.
    """
    spec = models.DecaySpec.exponential(0.97, landmark=2)
    rng = np.random.default_rng(1)
    for t_i, age in zip(rng.uniform(2, 500, 200), rng.uniform(0, 500, 200)):
        t = t_i + age
        assert decay.normalized_weight(spec, t_i, t) == pytest.approx(0.97 ** (t - t_i), rel=1e-12)
        assert decay.raw_weight(spec, t_i) / decay.raw_weight(spec, t) == pytest.approx(0.97 ** (t - t_i), rel=1e-12)


def test_relative_decay():
    """Test that polynomial decay gives the same weight to items at the same relative position.
    """
    spec = models.DecaySpec.polynomial(2, landmark=5)
    for gamma in (0.1, 0.5, 0.9):
        weights = [decay.normalized_weight(spec, gamma * t + (1 - gamma) * 5, t) for t in np.linspace(10, 1000, 50)]
        assert weights == pytest.approx([gamma ** 2] * len(weights), rel=1e-12)


def test_weight_bounds():
    """Test that weights are between zero and one and do not increase with time.
    """
    for spec in (models.DecaySpec.exponential(0.9), models.DecaySpec.polynomial(1.5)):
        weights = [decay.normalized_weight(spec, 10, t) for t in range(10, 200)]
        assert weights[0] == 1
        assert all(0 <= weight <= 1 for weight in weights)
        assert all(later <= earlier for earlier, later in zip(weights, weights[1:]))


def test_rebase_factor():
    """Test the rebase factors.
    """
    spec = models.DecaySpec.exponential(0.999, landmark=10)

    assert decay.rebase_factor(spec, 10) == 1
    assert decay.rebase_factor(spec, 1010) == pytest.approx(0.3677, abs=1e-4)
    assert decay.rebased(spec, 1010).landmark == 1010

    with pytest.raises(exceptions.UnsupportedOperationError):
        decay.rebase_factor(models.DecaySpec.polynomial(2), 10)
    with pytest.raises(exceptions.DecayDomainError):
        decay.rebase_factor(spec, 9)


def test_needs_rebase():
    """Test the rebase trigger.
    """
    spec = models.DecaySpec.exponential(0.99)
    limit = math.log(1e300) / -math.log(0.99)

    assert not decay.needs_rebase(spec, limit - 1, 1e300)
    assert decay.needs_rebase(spec, limit + 1, 1e300)
    assert not decay.needs_rebase(models.DecaySpec.polynomial(2), 1e9, 1e300)
