"""Helpers for statistical assertions."""

from inbl.constants import STATISTICAL_RETRIES
from inbl.generator import split_seed


def passes_with_retry(check, seed):
    """
    Run a statistical check, allowing one retry with a split seed.

    check -- callable(seed) returning True when within bounds
    seed -- the first seed
    """
    if check(seed):
        return True

    return any(check(split_seed(seed, stream))
               for stream in range(STATISTICAL_RETRIES))
