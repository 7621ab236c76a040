"""Caching module.
"""
import functools
import hashlib
import importlib
import logging
import pickle

import cachelib

from fdcmss import settings

# The module logger
logger = logging.getLogger(__name__)


def create_backend() -> cachelib.base.BaseCache:
    """Creates the cache backend configured in the settings.

    :return: The cache backend.
    """
    module_name, class_name = settings.CACHE_BACKEND.rsplit('.', 1)
    cache_class = getattr(importlib.import_module(module_name), class_name)

    return cache_class(default_timeout=settings.CACHE_TIMEOUT, **settings.CACHE_PARAMETERS)


backend = create_backend()


def cache(func):
    """Decorator that caches the result of a function, keyed by its arguments.

    :param func: The function.
    :return: Returns the function result.
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        cache_key = f"{func.__module__}:{func.__name__}:{hashlib.md5(f'{args}:{kwargs}'.encode()).hexdigest()}"
        cache_value = backend.get(cache_key)

        if cache_value is not None:
            logger.debug("Cache hit for %s", cache_key)
            return pickle.loads(cache_value)

        result = func(*args, **kwargs)
        backend.set(key=cache_key, value=pickle.dumps(result), timeout=settings.CACHE_TIMEOUT)

        return result

    return wrapper


def clear_cache():
    """Deletes all the cache keys.
    """
    backend.clear()
