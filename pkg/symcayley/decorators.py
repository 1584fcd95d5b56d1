import time
from functools import wraps

from .constants import CapKind


def _size_of(target) -> int:
    """Size argument of a capped call: an int, or anything carrying ``n``"""
    return target if isinstance(target, int) else target.n


def enforce_cap(kind: CapKind):
    """Reject calls whose size argument exceeds the engine's cap of the given kind

    The first positional argument after ``self`` is the size: an ``int`` or an object with an ``n`` attribute.
    """
    def decorator(func):
        @wraps(func)
        def wrapper(self, target, *args, **kwargs):
            self.engine.check_cap(_size_of(target), kind)
            return func(self, target, *args, **kwargs)
        return wrapper
    return decorator


def log_duration(label: str):
    """Log the start of an expensive call at INFO and its wall time at DEBUG"""
    def decorator(func):
        @wraps(func)
        def wrapper(self, *args, **kwargs):
            self.logger.info(f'{label}: started')
            start = time.perf_counter()
            result = func(self, *args, **kwargs)
            self.logger.debug(f'{label}: finished in {time.perf_counter() - start:.3f}s')
            return result
        return wrapper
    return decorator
