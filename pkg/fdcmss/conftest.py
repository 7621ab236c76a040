"""Configure testing module
"""
from fdcmss import caching


def pytest_configure():
    """Configure tests.
    """
    caching.clear_cache()
