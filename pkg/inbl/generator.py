"""
Random telegraph wave generators and the mask algebra of their products.

Each of the 2N base generators is a keyed counter-based function of
(seed, generator index, clock cycle), so any cycle can be sampled directly.
A product of base generators is identified by a GeneratorMask, a GF(2)
bitvector of width 2N: since every generator squared is the constant +1,
multiplying two products is the XOR of their masks.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ArgumentError, DimensionError, GeneratorIndexError
from .utils import check_cycles, check_seed


_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

# Stream tags for the flip-process discipline.
_INITIAL_STREAM = 1
_FLIP_STREAM = 2


def _mix64_int(z):
    """
    Apply the splitmix64 finalizer to a Python integer.

    z -- the value to mix
    """
    z &= _MASK64
    z = ((z ^ (z >> 30)) * _MIX1) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX2) & _MASK64
    return z ^ (z >> 31)


def _mix64(z):
    """
    Apply the splitmix64 finalizer to a uint64 array.

    z -- the array to mix
    """
    with np.errstate(over='ignore'):
        z = (z ^ (z >> np.uint64(30))) * np.uint64(_MIX1)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(_MIX2)
    return z ^ (z >> np.uint64(31))


def _stream_key(seed, index):
    return _mix64_int(seed ^ _mix64_int((index + 1) * _GOLDEN))


def split_seed(seed, stream):
    """
    Derive an independent seed from a parent seed.

    seed -- the parent 64-bit seed
    stream -- non-negative stream number

    Returns a 64-bit seed.
    """
    check_seed(seed)
    return _mix64_int(seed + (stream + 1) * _GOLDEN) ^ _mix64_int(stream)


@dataclass(frozen=True)
class GeneratorId:
    """Identifies the base generator W(significance, value)."""

    significance: int
    value: int

    @classmethod
    def from_index(cls, index):
        """
        Build the ID for a linear generator index.

        index -- linear index, 2*(significance - 1) + value
        """
        if index < 0:
            raise GeneratorIndexError('Negative generator index: {}'
                                      .format(index))

        return cls(index // 2 + 1, index % 2)

    def __str__(self):
        """Format this ID as R<i>,<j>."""
        return 'R{},{}'.format(self.significance, self.value)


def as_generator_id(gen_id):
    """
    Coerce a (significance, value) tuple into a GeneratorId.

    gen_id -- a GeneratorId or a 2-tuple
    """
    if isinstance(gen_id, GeneratorId):
        return gen_id

    significance, value = gen_id
    return GeneratorId(significance, value)


def generator_index(gen_id, n_bits):
    """
    Get the linear index of a generator.

    gen_id -- the GeneratorId (or tuple)
    n_bits -- number of noise-bits in the system

    Returns 2*(significance - 1) + value.
    """
    gen_id = as_generator_id(gen_id)

    if not 1 <= gen_id.significance <= n_bits:
        raise GeneratorIndexError('Significance {} out of range [1, {}]'
                                  .format(gen_id.significance, n_bits))

    if gen_id.value not in (0, 1):
        raise GeneratorIndexError('Bit value {} is not 0 or 1'
                                  .format(gen_id.value))

    return 2 * (gen_id.significance - 1) + gen_id.value


@dataclass(frozen=True)
class GeneratorMask:
    """
    A product of base generators as a GF(2) bitvector.

    Bit k of `bits` is set when the generator with linear index k appears in
    the product an odd number of times.
    """

    bits: int
    width: int

    def __post_init__(self):
        if self.width < 0 or self.width % 2:
            raise DimensionError('Mask width must be an even count: {}'
                                 .format(self.width))

        if self.bits < 0 or self.bits >> self.width:
            raise DimensionError('Mask bits exceed width {}'
                                 .format(self.width))

    @classmethod
    def identity(cls, width):
        """
        Get the all-zero mask, the constant +1 signal.

        width -- mask width, 2N
        """
        return cls(0, width)

    @classmethod
    def from_indices(cls, indices, width):
        """
        Build a mask from linear generator indices.

        indices -- iterable of linear indices; repeats cancel
        width -- mask width, 2N
        """
        bits = 0
        for index in indices:
            if not 0 <= index < width:
                raise GeneratorIndexError('Generator index {} out of range '
                                          '[0, {})'.format(index, width))

            bits ^= 1 << index

        return cls(bits, width)

    @classmethod
    def from_ids(cls, ids, n_bits):
        """
        Build a mask from generator IDs.

        ids -- iterable of GeneratorIds (or tuples)
        n_bits -- number of noise-bits in the system
        """
        return cls.from_indices((generator_index(i, n_bits) for i in ids),
                                2 * n_bits)

    @classmethod
    def from_hex(cls, text, width):
        """
        Parse the lowercase hex form written by to_hex().

        text -- hex digits
        width -- mask width, 2N
        """
        return cls(int(text, 16), width)

    @property
    def n_bits(self):
        """Number of noise-bits this mask is built for."""
        return self.width // 2

    def is_identity(self):
        """Return True for the all-zero mask."""
        return self.bits == 0

    def components(self):
        """
        Get the set generator indices.

        Returns a list of linear indices in ascending order.
        """
        return [k for k in range(self.width) if (self.bits >> k) & 1]

    def pair_bits(self, significance):
        """
        Get the two components belonging to one significance pair.

        significance -- bit significance, 1-based

        Returns (value-0 component, value-1 component) as 0/1 integers.
        """
        if not 1 <= significance <= self.n_bits:
            raise GeneratorIndexError('Significance {} out of range [1, {}]'
                                      .format(significance, self.n_bits))

        base = 2 * (significance - 1)
        return (self.bits >> base) & 1, (self.bits >> (base + 1)) & 1

    def to_hex(self):
        """Format as lowercase hex, bit 0 being linear index 0."""
        return format(self.bits, 'x')

    def __mul__(self, other):
        """Multiply two products of generators."""
        return mask_product(self, other)

    def __str__(self):
        """Format as a product of generator names."""
        if self.is_identity():
            return '1'

        return '·'.join(str(GeneratorId.from_index(k))
                        for k in self.components())


def mask_product(a, b):
    """
    Multiply two generator products.

    a -- first GeneratorMask
    b -- second GeneratorMask

    Returns the product mask, the componentwise XOR.
    """
    if a.width != b.width:
        raise DimensionError('Mask widths differ: {} != {}'
                             .format(a.width, b.width))

    return GeneratorMask(a.bits ^ b.bits, a.width)


def sample_generators(seed, index, ts):
    """
    Sample one base generator at many clock cycles.

    seed -- 64-bit seed
    index -- linear generator index
    ts -- clock cycles, array-like of non-negative integers

    Returns an int8 array of +1/-1 samples.
    """
    check_seed(seed)
    if index < 0:
        raise GeneratorIndexError('Negative generator index: {}'
                                  .format(index))

    ts = np.atleast_1d(np.asarray(ts))
    if ts.size and ts.min() < 0:
        raise ArgumentError('Clock index must be >= 0')

    ts = ts.astype(np.uint64)
    key = np.uint64(_stream_key(seed, index))

    with np.errstate(over='ignore'):
        state = ts * np.uint64(_GOLDEN) + key

    top = _mix64(_mix64(state) ^ key) >> np.uint64(63)
    return (1 - 2 * top.astype(np.int8)).astype(np.int8)


def sample_generator(seed, index, t):
    """
    Sample one base generator at one clock cycle.

    seed -- 64-bit seed
    index -- linear generator index
    t -- clock cycle

    Returns +1 or -1.
    """
    return int(sample_generators(seed, index, [t])[0])


class GeneratorBank:
    """Caches base generator rows over a window of clock cycles."""

    def __init__(self, seed, cycles, start=0):
        """
        Initialize the object.

        seed -- 64-bit seed
        cycles -- window length
        start -- first clock cycle of the window
        """
        self.seed = check_seed(seed)
        self.cycles = check_cycles(cycles)
        if start < 0:
            raise ArgumentError('Clock index must be >= 0')

        self.start = start
        self.rows = {}

    def row(self, index):
        """
        Get the samples of one base generator over the window.

        index -- linear generator index
        """
        if index not in self.rows:
            ts = np.arange(self.start, self.start + self.cycles,
                           dtype=np.uint64)
            self.rows[index] = sample_generators(self.seed, index, ts)

        return self.rows[index]

    def series(self, mask):
        """
        Evaluate a generator product over the window.

        mask -- the GeneratorMask

        Returns an int8 array of +1/-1 samples.
        """
        out = np.ones(self.cycles, dtype=np.int8)
        for index in mask.components():
            out *= self.row(index)

        return out

    def mean(self, mask):
        """
        Time-average a generator product over the window.

        mask -- the GeneratorMask
        """
        total = int(self.series(mask).sum(dtype=np.int64))
        return total / self.cycles


def eval_mask(seed, mask, t):
    """
    Evaluate a generator product at one clock cycle.

    seed -- 64-bit seed
    mask -- the GeneratorMask
    t -- clock cycle

    Returns +1 or -1; the identity mask gives +1.
    """
    value = 1
    for index in mask.components():
        value *= sample_generator(seed, index, t)

    return value


def eval_mask_series(seed, mask, cycles, start=0):
    """
    Evaluate a generator product over consecutive clock cycles.

    seed -- 64-bit seed
    mask -- the GeneratorMask
    cycles -- number of cycles
    start -- first clock cycle

    Returns an int8 array.
    """
    return GeneratorBank(seed, cycles, start).series(mask)


def mean_estimate(seed, mask, cycles):
    """
    Estimate the mean of a generator product over cycles 0..M-1.

    seed -- 64-bit seed
    mask -- the GeneratorMask
    cycles -- number of cycles M, at least 1
    """
    return GeneratorBank(seed, cycles).mean(mask)


def telegraph_path(seed, index, cycles):
    """
    Sample a generator as an explicit flip process.

    The wave starts at a random value and flips with probability 1/2 at the
    start of every later cycle. The initial value and the flips come from
    streams split off the generator's own key.

    seed -- 64-bit seed
    index -- linear generator index
    cycles -- path length

    Returns an int8 array of +1/-1 samples.
    """
    check_cycles(cycles)
    initial = sample_generator(split_seed(seed, _INITIAL_STREAM), index, 0)
    flips = sample_generators(split_seed(seed, _FLIP_STREAM), index,
                              np.arange(1, cycles, dtype=np.uint64))

    path = np.empty(cycles, dtype=np.int8)
    path[0] = initial
    path[1:] = flips
    return np.cumprod(path, dtype=np.int8)


def flip_rate(path):
    """
    Get the fraction of cycle boundaries at which a path changed value.

    path -- array of +1/-1 samples, at least two long
    """
    path = np.asarray(path)
    if path.size < 2:
        raise ArgumentError('Need at least two samples for a flip rate')

    return float(np.count_nonzero(path[1:] != path[:-1])) / (path.size - 1)
