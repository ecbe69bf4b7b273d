"""Utility functions."""

import datetime

from .constants import MAX_SEED
from .errors import ArgumentError


def timestamp():
    """
    Get the current time.

    Returns the current time in the form YYYY-mm-ddTHH:MM:SS+00:00
    """
    return datetime.datetime.now(datetime.timezone.utc).strftime(
        '%Y-%m-%dT%H:%M:%S+00:00')


def check_seed(seed):
    """
    Validate a 64-bit seed.

    seed -- the seed to check

    Returns the seed as an int.
    """
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise ArgumentError('Seed must be an integer: {!r}'.format(seed))

    if seed < 0 or seed > MAX_SEED:
        raise ArgumentError('Seed out of 64-bit range: {}'.format(seed))

    return seed


def check_n_bits(n_bits):
    """
    Validate a noise-bit count.

    n_bits -- the number of noise-bits
    """
    if isinstance(n_bits, bool) or not isinstance(n_bits, int) or n_bits < 1:
        raise ArgumentError('Number of noise-bits must be >= 1: {!r}'
                            .format(n_bits))

    return n_bits


def check_cycles(cycles):
    """
    Validate a cycle count.

    cycles -- number of clock cycles, at least 1
    """
    if isinstance(cycles, bool) or not isinstance(cycles, int) or cycles < 1:
        raise ArgumentError('Cycle count must be >= 1: {!r}'.format(cycles))

    return cycles
