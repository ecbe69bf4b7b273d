"""The reference system: 2N wires which gates multiply by masks."""

import functools
import sys
from dataclasses import dataclass

from .errors import ArgumentError, DimensionError, GeneratorIndexError
from .generator import (GeneratorId, GeneratorMask, as_generator_id,
                        eval_mask, eval_mask_series, generator_index,
                        mask_product)
from .schemas import SchemaRegistry
from .utils import check_n_bits, check_seed


print = functools.partial(print, file=sys.stderr, flush=True)


def generator_ids(n_bits):
    """
    List the generator IDs of a system in linear index order.

    n_bits -- number of noise-bits
    """
    return [GeneratorId(i, j) for i in range(1, n_bits + 1) for j in (0, 1)]


def describe_wire(mask):
    """
    Describe the signal carried by a wire.

    mask -- the wire's GeneratorMask

    Returns a product of generator names, e.g. R1,1·R3,0·R3,1.
    """
    return str(mask)


class _WireReader:
    """Read operations shared by live systems and snapshots."""

    def wire_mask(self, gen_id):
        """
        Get the mask currently carried by a wire.

        gen_id -- GeneratorId (or tuple) of the wire
        """
        return self._wires()[generator_index(gen_id, self.n_bits)]

    def wire_signal(self, gen_id, t):
        """
        Sample a wire at one clock cycle.

        gen_id -- GeneratorId (or tuple) of the wire
        t -- clock cycle

        Returns +1 or -1.
        """
        return eval_mask(self.seed, self.wire_mask(gen_id), t)

    def wire_series(self, gen_id, cycles, start=0):
        """
        Sample a wire over consecutive clock cycles.

        gen_id -- GeneratorId (or tuple) of the wire
        cycles -- number of cycles
        start -- first clock cycle

        Returns an int8 array.
        """
        return eval_mask_series(self.seed, self.wire_mask(gen_id), cycles,
                                start)

    def wire_table(self):
        """
        Get the wire table in its JSON form.

        Returns a list of [significance, value, mask hex] triples.
        """
        return [[gen_id.significance, gen_id.value, mask.to_hex()]
                for gen_id, mask in zip(generator_ids(self.n_bits),
                                        self._wires())]

    def describe(self):
        """
        Describe every wire symbolically.

        Returns a list of (GeneratorId, description) tuples.
        """
        return [(gen_id, describe_wire(mask))
                for gen_id, mask in zip(generator_ids(self.n_bits),
                                        self._wires())]


@dataclass(frozen=True)
class WireSnapshot(_WireReader):
    """An immutable copy of a reference system's wire table."""

    n_bits: int
    seed: int
    wires: tuple

    def _wires(self):
        return self.wires

    @classmethod
    def from_wire_table(cls, n_bits, seed, table):
        """
        Load a snapshot from its JSON wire table.

        n_bits -- number of noise-bits
        seed -- 64-bit seed
        table -- list of [significance, value, mask hex] triples
        """
        SchemaRegistry().validate('wire-table', table)
        check_n_bits(n_bits)

        wires = [None] * (2 * n_bits)
        for significance, value, mask_hex in table:
            index = generator_index((significance, value), n_bits)
            wires[index] = GeneratorMask.from_hex(mask_hex, 2 * n_bits)

        if any(w is None for w in wires):
            raise DimensionError('Wire table does not cover all {} wires'
                                 .format(2 * n_bits))

        return cls(n_bits, check_seed(seed), tuple(wires))


class ReferenceSystem(_WireReader):
    """
    The table of 2N reference wires.

    Gates act on the reference system only: they multiply wires by products
    of base generators and count every multiplication in `mul_counter`.
    """

    def __init__(self, n_bits, seed, verbose=False):
        """
        Initialize the object with every wire carrying its base generator.

        n_bits -- number of noise-bits N
        seed -- 64-bit seed
        verbose -- whether or not to enable verbose logging
        """
        self.n_bits = check_n_bits(n_bits)
        self.seed = check_seed(seed)
        self.verbose = verbose
        self.width = 2 * n_bits
        self.wires = {
            gen_id: GeneratorMask(1 << k, self.width)
            for k, gen_id in enumerate(generator_ids(n_bits))
        }
        self.mul_counter = 0

    def _wires(self):
        return list(self.wires.values())

    def wire_mask(self, gen_id):
        """
        Get the mask currently carried by a wire.

        gen_id -- GeneratorId (or tuple) of the wire
        """
        generator_index(gen_id, self.n_bits)
        return self.wires[as_generator_id(gen_id)]

    def pair_product(self, h):
        """
        Form the product of the two base generators of bit h.

        The product is taken from the base generators, not from the current
        wires. Counts as one multiplication.

        h -- bit significance

        Returns the GeneratorMask {e(h,0), e(h,1)}.
        """
        if not 1 <= h <= self.n_bits:
            raise GeneratorIndexError('Significance {} out of range [1, {}]'
                                      .format(h, self.n_bits))

        self.mul_counter += 1
        mask = GeneratorMask.from_ids([(h, 0), (h, 1)], self.n_bits)

        if self.verbose:
            print('ReferenceSystem: pair_product', h, '->', mask)

        return mask

    def multiply_wire(self, gen_id, by):
        """
        Multiply one reference wire by a generator product.

        Counts as one multiplication.

        gen_id -- GeneratorId (or tuple) of the wire
        by -- the GeneratorMask to multiply with
        """
        generator_index(gen_id, self.n_bits)
        gen_id = as_generator_id(gen_id)

        self.wires[gen_id] = mask_product(self.wires[gen_id], by)
        self.mul_counter += 1

        if self.verbose:
            print('ReferenceSystem: multiply_wire', str(gen_id), 'by', by,
                  '->', self.wires[gen_id])

        return self

    def snapshot(self):
        """Take an immutable copy of the wire table."""
        return WireSnapshot(self.n_bits, self.seed, tuple(self._wires()))

    def restore(self, snapshot):
        """
        Replace the wire table by a snapshot's.

        The multiplication counter is left as it is.

        snapshot -- a WireSnapshot of a system with equal N and seed
        """
        if snapshot.n_bits != self.n_bits:
            raise ArgumentError('Snapshot has {} noise-bits, system has {}'
                                .format(snapshot.n_bits, self.n_bits))

        if snapshot.seed != self.seed:
            raise ArgumentError('Snapshot seed differs from system seed')

        for gen_id, mask in zip(generator_ids(self.n_bits), snapshot.wires):
            self.wires[gen_id] = mask

        if self.verbose:
            print('ReferenceSystem: restored snapshot')

        return self

    def as_dict(self):
        """
        Get the system state as a dictionary.

        Returns the state as a dictionary.
        """
        return {
            'bits': self.n_bits,
            'seed': self.seed,
            'wires': self.wire_table(),
            'mulCounter': self.mul_counter,
        }


def new_system(n_bits, seed, verbose=False):
    """
    Build a fresh reference system.

    n_bits -- number of noise-bits, at least 1
    seed -- 64-bit seed
    verbose -- whether or not to enable verbose logging
    """
    return ReferenceSystem(n_bits, seed, verbose=verbose)
