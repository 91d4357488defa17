import time
import functools


def timed(func):
    """
    A decorator that measures the wall time of each call with a monotonic clock.

    The wrapped function returns (result, elapsed_seconds).
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        result = func(*args, **kwargs)
        return result, time.perf_counter() - start
    return wrapper
