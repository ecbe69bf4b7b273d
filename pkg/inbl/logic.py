"""Evaluation and decoding of superpositions under a reference system."""

import math
from collections import Counter

import numpy as np

from .errors import DimensionError, UndecodableError
from .generator import GeneratorBank, eval_mask, mask_product
from .utils import check_n_bits


def _check_size(term_bits, system):
    if term_bits != system.n_bits:
        raise DimensionError('String has {} bits, system has {}'
                             .format(term_bits, system.n_bits))


def realized_mask(term, system):
    """
    Get the generator product a string carries on the current wires.

    term -- the StringTerm
    system -- a ReferenceSystem or WireSnapshot

    Returns the XOR of the selected wires' masks.
    """
    _check_size(term.n_bits, system)

    mask = system.wire_mask((1, term.bit(1)))
    for i in range(2, term.n_bits + 1):
        mask = mask_product(mask, system.wire_mask((i, term.bit(i))))

    return mask


def eval_superposition(sup, system, t):
    """
    Sample the superposition signal at one clock cycle.

    sup -- the Superposition
    system -- a ReferenceSystem or WireSnapshot
    t -- clock cycle

    Returns an integer in [-K, K] with the parity of K.
    """
    _check_size(sup.n_bits, system)
    return sum(term.multiplicity *
               eval_mask(system.seed, realized_mask(term, system), t)
               for term in sup)


def eval_superposition_series(sup, system, cycles, start=0):
    """
    Sample the superposition signal over consecutive clock cycles.

    sup -- the Superposition
    system -- a ReferenceSystem or WireSnapshot
    cycles -- number of cycles
    start -- first clock cycle

    Returns an int64 array.
    """
    _check_size(sup.n_bits, system)
    bank = GeneratorBank(system.seed, cycles, start)

    weights = Counter()
    for term in sup:
        weights[realized_mask(term, system)] += term.multiplicity

    total = np.zeros(cycles, dtype=np.int64)
    for mask, weight in weights.items():
        total += weight * bank.series(mask).astype(np.int64)

    return total


def decode_term(term, system):
    """
    Read back the number a string represents on the current wires.

    term -- the StringTerm
    system -- a ReferenceSystem or WireSnapshot

    Returns the number R.
    """
    mask = realized_mask(term, system)

    number = 0
    for i in range(1, term.n_bits + 1):
        zero, one = mask.pair_bits(i)
        if zero == one:
            raise UndecodableError(
                'Significance {} carries {} components: {}'
                .format(i, zero + one, mask))

        number |= one << (i - 1)

    return number


def decode_superposition(sup, system):
    """
    Read back every number in a superposition.

    sup -- the Superposition
    system -- a ReferenceSystem or WireSnapshot

    Returns a Counter of number -> multiplicity.
    """
    numbers = Counter()
    for term in sup:
        numbers[decode_term(term, system)] += term.multiplicity

    return numbers


def subspace_count(n_bits):
    """
    Count the non-empty subsets of the 2^N strings.

    n_bits -- number of noise-bits N

    Returns 2^(2^N) - 1.
    """
    check_n_bits(n_bits)
    return 2 ** (2 ** n_bits) - 1


def subspace_count_by_summation(n_bits):
    """
    Count the non-empty subsets of the 2^N strings by binomial summation.

    n_bits -- number of noise-bits N
    """
    check_n_bits(n_bits)
    size = 2 ** n_bits
    return sum(math.comb(size, k) for k in range(1, size + 1))


def format_term(term, system, label=None):
    """
    Render a string as the product of generators it carries.

    term -- the StringTerm
    system -- a ReferenceSystem or WireSnapshot
    label -- optional payload label written in front, e.g. Y0

    Returns text such as 'Y1 R1,1·R2,0·R3,1'.
    """
    text = str(realized_mask(term, system))

    if label is not None:
        return '{} {}'.format(label, text)

    return text
